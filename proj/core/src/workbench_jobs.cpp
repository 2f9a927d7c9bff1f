#include "landau/workbench.hpp"

#include "landau/errors.hpp"
#include "landau/radial_oracle.hpp"
#include "landau/wavefunctions.hpp"

#include <fmt/format.h>
#include "json.hpp"

#include <algorithm>
#include <ostream>

namespace landau::workbench {

using geometry::Scenario;

namespace {

std::vector<double> sorted_unique(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

std::vector<double> q_values(const ScenarioConfig& config) {
    if (geometry::scenario_of(config.defect) == Scenario::KKDispiration) return sorted_unique(config.Q_values);
    return {0.0};
}

std::string scenario_name(const ScenarioConfig& config) {
    return std::string(geometry::to_string(geometry::scenario_of(config.defect)));
}

void add_unique(std::vector<std::string>& into, const std::string& warning) {
    if (std::find(into.begin(), into.end(), warning) == into.end()) into.push_back(warning);
}

std::string cell_text(const Cell& cell) {
    struct Visitor {
        std::string operator()(std::int64_t v) const { return fmt::format("{}", v); }
        std::string operator()(double v) const { return fmt::format("{:.17g}", v); }
        std::string operator()(const std::string& v) const {
            if (v.find_first_of(",\"\n\r") == std::string::npos) return v;
            std::string quoted = "\"";
            for (char c : v) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + '"';
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json cell_json(const Cell& cell) {
    return std::visit([](const auto& v) { return nlohmann::ordered_json(v); }, cell);
}

} // namespace

Table run_spectrum(const ScenarioConfig& config) {
    const Scenario scenario = geometry::scenario_of(config.defect);
    const bool kk = scenario == Scenario::KKDispiration;
    const double alpha = geometry::alpha_of(config.defect);
    const double beta = geometry::beta_of(config.defect);
    const double phi = geometry::flux_of(config.defect);
    const std::string name = scenario_name(config);

    Table table;
    table.columns = {"scenario", "alpha", "beta", "phi", "omega", "charge_sign", "n",
                     "l",        "k",     "Q",    "E",   "E_over_omega", "nu", "cluster_id"};
    std::int64_t cluster_id = 0;
    for (double k : sorted_unique(config.k_values)) {
        for (double Q : q_values(config)) {
            const double omega = spectra::omega_effective(config.defect, config.field, Q);
            spectra::DegeneracyReport report;
            try {
                report = spectra::degeneracy_report(config.defect, config.field,
                                                    {config.n_max, config.l_min, config.l_max, k, Q},
                                                    config.output.cluster_tolerance * omega);
            } catch (const DomainError& e) {
                throw DomainError(fmt::format("{} (at k={:.17g}, Q={:.17g})", e.what(), k, Q));
            }
            for (const spectra::LevelCluster& cluster : report.clusters) {
                for (const spectra::QuantumNumbers& qn : cluster.members) {
                    const spectra::EnergyLevel level = spectra::energy_level(config.defect, config.field, qn);
                    table.rows.push_back({name, alpha, beta, phi, omega,
                                          std::int64_t{kk ? 1 : config.field.charge_sign}, std::int64_t{qn.n},
                                          std::int64_t{qn.l}, k, Q, level.energy, level.energy / omega, level.nu,
                                          cluster_id});
                }
                ++cluster_id;
            }
        }
    }
    table.metadata = {{"scenario", name}, {"levels", static_cast<std::int64_t>(table.rows.size())},
                      {"clusters", cluster_id}};
    return table;
}

VerifyResult run_verify(const ScenarioConfig& config) {
    const std::string name = scenario_name(config);
    VerifyResult result;
    Table& table = result.table;
    table.columns = {"scenario", "n", "l", "k", "Q", "kk_shift", "E_analytic", "E_oracle",
                     "abs_dev",  "rel_dev", "pass", "error"};

    oracle::ValidationRequest request;
    request.n_max = config.n_max;
    for (int l = config.l_min; l <= config.l_max; ++l) request.l_values.push_back(l);
    request.tolerance = config.oracle.tolerance;
    request.options = {config.oracle.N, config.oracle.rho_max, config.oracle.richardson};

    const bool kk = geometry::scenario_of(config.defect) == Scenario::KKDispiration;
    double max_abs = 0.0;
    double max_rel = 0.0;
    std::int64_t failed = 0;
    for (double k : sorted_unique(config.k_values)) {
        for (double Q : q_values(config)) {
            request.k = k;
            request.Q = Q;
            const oracle::ValidationReport report = oracle::cross_validate(config.defect, config.field, request);
            for (const std::string& w : report.warnings) add_unique(table.warnings, w);
            for (const oracle::ValidationRow& row : report.rows) {
                table.rows.push_back({name, std::int64_t{row.qn.n}, std::int64_t{row.qn.l}, k, Q,
                                      kk ? 0.5 * Q * Q : 0.0, row.analytic, row.oracle, row.abs_dev, row.rel_dev,
                                      std::string(row.pass ? "true" : "false"), row.error});
                if (!row.pass) ++failed;
            }
            max_abs = std::max(max_abs, report.max_abs_dev);
            max_rel = std::max(max_rel, report.max_rel_dev);
        }
    }
    result.all_pass = failed == 0;
    table.metadata = {{"scenario", name},
                      {"status", std::string(result.all_pass ? "PASS" : "FAIL")},
                      {"rows", static_cast<std::int64_t>(table.rows.size())},
                      {"failed", failed},
                      {"max_abs_dev", max_abs},
                      {"max_rel_dev", max_rel},
                      {"tolerance", config.oracle.tolerance},
                      {"N", std::int64_t{config.oracle.N}},
                      {"richardson", std::string(config.oracle.richardson ? "true" : "false")}};
    return result;
}

Table run_wavefunction(const ScenarioConfig& config, const WavefunctionRequest& request) {
    if (request.n < 0 || request.n > config.n_max) {
        throw DomainError(fmt::format("wavefunction: n = {} lies outside [0, quantum.n_max = {}]", request.n,
                                      config.n_max));
    }
    if (request.l < config.l_min || request.l > config.l_max) {
        throw DomainError(fmt::format("wavefunction: l = {} lies outside [{}, {}]", request.l, config.l_min,
                                      config.l_max));
    }
    const bool kk = geometry::scenario_of(config.defect) == Scenario::KKDispiration;
    const double k = request.k.value_or(config.k_values.front());
    const double Q = request.Q.value_or(kk ? config.Q_values.front() : 0.0);

    const wavefunction::RadialProfile profile = wavefunction::normalize(
        wavefunction::radial_eigenfunction(config.defect, config.field, {request.n, request.l, k, Q}));

    Table table;
    table.metadata = {{"scenario", scenario_name(config)},
                      {"n", std::int64_t{request.n}},
                      {"l", std::int64_t{request.l}},
                      {"k", k},
                      {"Q", Q},
                      {"E", profile.energy},
                      {"C", profile.C},
                      {"nu", profile.nu},
                      {"w", profile.w},
                      {"nodes", std::int64_t{wavefunction::count_nodes(profile)}},
                      {"rho_cut", profile.rho_cut}};
    table.warnings = profile.warnings;
    table.columns = {"rho", "R", "density"};
    for (const wavefunction::Sample& s : wavefunction::sample(profile, request.samples)) {
        table.rows.push_back({s.rho, s.R, s.density});
    }
    return table;
}

Table run_sweep(const ScenarioConfig& config) {
    if (!config.sweep) throw ConfigurationError("sweep: the configuration has no sweep.parameter/sweep.values");
    Table table;
    table.columns = {"sweep_parameter", "sweep_value"};
    std::int64_t points = 0;
    for (double value : config.sweep->values) {
        ScenarioConfig point = config;
        try {
            apply_sweep_value(point, config.sweep->parameter, value);
        } catch (const DomainError& e) {
            throw DomainError(fmt::format("sweep {} = {:.17g}: {}", config.sweep->parameter, value, e.what()));
        }
        Table spectrum = run_spectrum(point);
        if (table.columns.size() == 2) {
            table.columns.insert(table.columns.end(), spectrum.columns.begin(), spectrum.columns.end());
        }
        for (auto& row : spectrum.rows) {
            std::vector<Cell> out{config.sweep->parameter, value};
            out.insert(out.end(), std::make_move_iterator(row.begin()), std::make_move_iterator(row.end()));
            table.rows.push_back(std::move(out));
        }
        ++points;
    }
    table.metadata = {{"scenario", scenario_name(config)},
                      {"sweep_parameter", config.sweep->parameter},
                      {"points", points}};
    return table;
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
    if (format == OutputFormat::Json) {
        nlohmann::ordered_json doc;
        doc["metadata"] = nlohmann::ordered_json::object();
        for (const auto& [key, value] : table.metadata) doc["metadata"][key] = cell_json(value);
        doc["warnings"] = table.warnings;
        doc["columns"] = table.columns;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : table.rows) {
            nlohmann::ordered_json record = nlohmann::ordered_json::object();
            for (std::size_t i = 0; i < row.size(); ++i) record[table.columns[i]] = cell_json(row[i]);
            doc["rows"].push_back(std::move(record));
        }
        out << doc.dump(2) << '\n';
        return;
    }
    for (const auto& [key, value] : table.metadata) out << "# " << key << '=' << cell_text(value) << '\n';
    for (const std::string& w : table.warnings) out << "# warning: " << w << '\n';
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
        out << '\n';
    }
}

} // namespace landau::workbench

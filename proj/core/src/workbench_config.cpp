#include "landau/workbench.hpp"

#include "landau/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

namespace landau::workbench {

using geometry::Scenario;

namespace {

struct Entry {
    std::string value;
    int line = 0;
};

const std::set<std::string, std::less<>> known_keys = {
    "defect.type",      "defect.alpha",        "defect.q",         "defect.radius",   "defect.beta",
    "defect.phi",       "field.omega",         "field.charge_sign", "field.B0",       "quantum.n_max",
    "quantum.l_min",    "quantum.l_max",       "quantum.k",        "quantum.Q",       "oracle.N",
    "oracle.rho_max",   "oracle.tolerance",    "oracle.richardson", "output.format",  "output.path",
    "output.cluster_tolerance", "sweep.parameter", "sweep.values",
};

std::optional<Scenario> scenario_from(std::string_view name) {
    for (Scenario s : {Scenario::Disclination, Scenario::DisclinationDisk, Scenario::ScrewDislocation,
                       Scenario::Dispiration, Scenario::KKDispiration}) {
        if (geometry::to_string(s) == name) return s;
    }
    return std::nullopt;
}

std::vector<std::string> variant_fields(Scenario s) {
    switch (s) {
    case Scenario::Disclination: return {"alpha"};
    case Scenario::DisclinationDisk: return {"q", "radius"};
    case Scenario::ScrewDislocation: return {"beta", "phi"};
    case Scenario::Dispiration:
    case Scenario::KKDispiration: return {"alpha", "beta"};
    }
    return {};
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const std::string& item : items) {
        if (!out.empty()) out += ", ";
        out += item;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

class Parser {
public:
    explicit Parser(std::string_view text) { tokenize(text); }

    ScenarioConfig run() {
        ScenarioConfig config;
        const std::optional<Scenario> scenario = parse_defect(config);
        if (scenario) {
            parse_field(config, *scenario);
            parse_quantum(config, *scenario);
            parse_sweep(config, *scenario);
        }
        parse_oracle(config);
        parse_output(config);
        if (!issues_.empty()) throw ConfigError(std::move(issues_));
        return config;
    }

private:
    std::map<std::string, Entry, std::less<>> entries_;
    std::vector<ConfigIssue> issues_;

    void issue(int line, std::string message) { issues_.push_back({line, std::move(message)}); }

    void tokenize(std::string_view text) {
        int line_no = 0;
        while (!text.empty()) {
            ++line_no;
            const auto eol = text.find('\n');
            std::string_view line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
            if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;

            const auto eq = line.find('=');
            if (eq == std::string_view::npos) {
                issue(line_no, fmt::format("expected `section.key = value`, got `{}`", line));
                continue;
            }
            const std::string key(trim(line.substr(0, eq)));
            const std::string value(trim(line.substr(eq + 1)));
            if (!known_keys.contains(key)) {
                issue(line_no, fmt::format("unknown key `{}`", key));
                continue;
            }
            if (value.empty()) {
                issue(line_no, fmt::format("{} has an empty value", key));
                continue;
            }
            if (auto it = entries_.find(key); it != entries_.end()) {
                issue(line_no, fmt::format("duplicate key {} (first set on line {})", key, it->second.line));
                continue;
            }
            entries_.emplace(key, Entry{value, line_no});
        }
    }

    const Entry* find(std::string_view key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    int line_of(std::string_view key) const {
        const Entry* e = find(key);
        return e ? e->line : 0;
    }

    std::optional<double> to_real(std::string_view key, std::string_view text, int line) {
        double value = 0.0;
        const auto* end = text.data() + text.size();
        const auto [ptr, ec] = std::from_chars(text.data(), end, value);
        if (ec != std::errc{} || ptr != end) {
            issue(line, fmt::format("{}: `{}` is not a real number", key, text));
            return std::nullopt;
        }
        if (!std::isfinite(value)) {
            issue(line, fmt::format("{}: value must be finite", key));
            return std::nullopt;
        }
        return value;
    }

    std::optional<double> real(std::string_view key) {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        return to_real(key, e->value, e->line);
    }

    std::optional<long long> integer(std::string_view key) {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        long long value = 0;
        const auto* end = e->value.data() + e->value.size();
        const auto [ptr, ec] = std::from_chars(e->value.data(), end, value);
        if (ec != std::errc{} || ptr != end) {
            issue(e->line, fmt::format("{}: `{}` is not an integer", key, e->value));
            return std::nullopt;
        }
        return value;
    }

    std::optional<std::vector<double>> real_list(std::string_view key) {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        std::vector<double> values;
        std::string_view rest = e->value;
        bool ok = true;
        while (true) {
            const auto comma = rest.find(',');
            const std::string_view item = trim(rest.substr(0, comma));
            if (item.empty()) {
                issue(e->line, fmt::format("{}: empty list entry", key));
                ok = false;
            } else if (auto v = to_real(key, item, e->line)) {
                values.push_back(*v);
            } else {
                ok = false;
            }
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        if (!ok) return std::nullopt;
        return values;
    }

    void require(std::string_view key, std::string_view why) {
        if (!find(key)) issue(0, fmt::format("missing required key {} ({})", key, why));
    }

    void forbid(std::string_view key, std::string_view why) {
        if (const Entry* e = find(key)) issue(e->line, fmt::format("{} is not allowed: {}", key, why));
    }

    std::optional<Scenario> parse_defect(ScenarioConfig& config) {
        const Entry* type = find("defect.type");
        if (!type) {
            issue(0, "missing required key defect.type");
            return std::nullopt;
        }
        const std::optional<Scenario> scenario = scenario_from(type->value);
        if (!scenario) {
            issue(type->line, fmt::format("defect.type: unknown variant `{}` (expected disclination, "
                                          "disclination_disk, screw, dispiration or kk_dispiration)",
                                          type->value));
            return std::nullopt;
        }
        const std::vector<std::string> fields = variant_fields(*scenario);
        const std::string variant(geometry::to_string(*scenario));
        bool complete = true;
        for (const char* name : {"alpha", "q", "radius", "beta", "phi"}) {
            const std::string key = fmt::format("defect.{}", name);
            const bool legal = std::find(fields.begin(), fields.end(), name) != fields.end();
            if (!legal) {
                if (const Entry* e = find(key)) {
                    issue(e->line, fmt::format("{} is illegal for variant {} (legal fields: {})", key, variant,
                                               join(fields)));
                }
            } else if (!find(key)) {
                issue(0, fmt::format("missing required key {} for variant {}", key, variant));
                complete = false;
            }
        }
        if (!complete) return scenario;

        std::map<std::string, double> v;
        for (const std::string& name : fields) {
            const auto value = real("defect." + name);
            if (!value) return scenario;
            v[name] = *value;
        }
        if (v.contains("alpha") && !(v["alpha"] > 0.0)) {
            issue(line_of("defect.alpha"),
                  fmt::format("defect.alpha = {} violates the invariant alpha > 0", format_real(v["alpha"])));
            return scenario;
        }
        try {
            switch (*scenario) {
            case Scenario::Disclination: config.defect = geometry::Disclination(v["alpha"]); break;
            case Scenario::DisclinationDisk:
                config.defect = geometry::DisclinationDisk(v["q"], v["radius"]);
                break;
            case Scenario::ScrewDislocation: config.defect = geometry::ScrewDislocation(v["beta"], v["phi"]); break;
            case Scenario::Dispiration: config.defect = geometry::Dispiration(v["alpha"], v["beta"]); break;
            case Scenario::KKDispiration: config.defect = geometry::KKDispiration(v["alpha"], v["beta"]); break;
            }
        } catch (const DomainError& e) {
            const int line = *scenario == Scenario::DisclinationDisk ? line_of("defect.q") : type->line;
            issue(line, fmt::format("defect block violates an invariant: {}", e.what()));
        }
        return scenario;
    }

    void parse_field(ScenarioConfig& config, Scenario scenario) {
        if (scenario == Scenario::KKDispiration) {
            forbid("field.omega", "the KK level spacing is B0 Q");
            forbid("field.charge_sign", "the KK charge is the sign of Q");
            require("field.B0", "kk_dispiration");
            if (auto b0 = real("field.B0")) config.field.kk_field = *b0;
            return;
        }
        forbid("field.B0", "only kk_dispiration carries B0");
        require("field.omega", "cyclotron frequency");
        require("field.charge_sign", "+1 hole, -1 electron");
        if (auto omega = real("field.omega")) {
            if (*omega > 0.0) {
                config.field.omega = *omega;
            } else {
                issue(line_of("field.omega"),
                      fmt::format("field.omega = {} violates the invariant omega > 0", format_real(*omega)));
            }
        }
        if (auto s = integer("field.charge_sign")) {
            if (*s == 1 || *s == -1) {
                config.field.charge_sign = static_cast<int>(*s);
            } else {
                issue(line_of("field.charge_sign"), "field.charge_sign must be +1 or -1");
            }
        }
    }

    void parse_quantum(ScenarioConfig& config, Scenario scenario) {
        require("quantum.n_max", "highest radial index");
        require("quantum.l_min", "angular range");
        require("quantum.l_max", "angular range");
        require("quantum.k", "longitudinal momenta");
        if (auto n = integer("quantum.n_max")) {
            if (*n >= 0 && *n <= 1000) {
                config.n_max = static_cast<int>(*n);
            } else {
                issue(line_of("quantum.n_max"), "quantum.n_max must lie in [0, 1000]");
            }
        }
        const auto lo = integer("quantum.l_min");
        const auto hi = integer("quantum.l_max");
        if (lo && hi) {
            if (*lo > *hi) {
                issue(line_of("quantum.l_max"),
                      fmt::format("empty angular range: l_min = {} exceeds l_max = {}", *lo, *hi));
            } else if (*lo < -100000 || *hi > 100000) {
                issue(line_of("quantum.l_max"), "angular range must lie within [-100000, 100000]");
            } else {
                config.l_min = static_cast<int>(*lo);
                config.l_max = static_cast<int>(*hi);
            }
        }
        if (auto k = real_list("quantum.k")) config.k_values = *k;

        if (scenario != Scenario::KKDispiration) {
            forbid("quantum.Q", "only kk_dispiration carries Q");
            return;
        }
        require("quantum.Q", "KK momenta");
        if (auto q = real_list("quantum.Q")) {
            config.Q_values = *q;
            for (double Q : *q) {
                if (!(config.field.kk_field * Q > 0.0)) {
                    issue(line_of("quantum.Q"),
                          fmt::format("B0 Q = {} is not positive for Q = {}: no bound Landau states",
                                      format_real(config.field.kk_field * Q), format_real(Q)));
                }
            }
        }
    }

    void parse_oracle(ScenarioConfig& config) {
        if (auto n = integer("oracle.N")) {
            if (*n >= 64 && *n <= (1 << 24)) {
                config.oracle.N = static_cast<int>(*n);
            } else {
                issue(line_of("oracle.N"), "oracle.N must lie in [64, 16777216]");
            }
        }
        if (auto r = real("oracle.rho_max")) {
            if (*r > 0.0) {
                config.oracle.rho_max = *r;
            } else {
                issue(line_of("oracle.rho_max"), "oracle.rho_max must be > 0");
            }
        }
        if (auto t = real("oracle.tolerance")) {
            if (*t > 0.0) {
                config.oracle.tolerance = *t;
            } else {
                issue(line_of("oracle.tolerance"), "oracle.tolerance must be > 0");
            }
        }
        if (const Entry* e = find("oracle.richardson")) {
            if (e->value == "true") {
                config.oracle.richardson = true;
            } else if (e->value == "false") {
                config.oracle.richardson = false;
            } else {
                issue(e->line, "oracle.richardson must be true or false");
            }
        }
    }

    void parse_output(ScenarioConfig& config) {
        if (const Entry* e = find("output.format")) {
            if (e->value == "csv") {
                config.output.format = OutputFormat::Csv;
            } else if (e->value == "json") {
                config.output.format = OutputFormat::Json;
            } else {
                issue(e->line, fmt::format("output.format: expected csv or json, got `{}`", e->value));
            }
        }
        if (const Entry* e = find("output.path")) config.output.path = e->value;
        if (auto t = real("output.cluster_tolerance")) {
            if (*t > 0.0) {
                config.output.cluster_tolerance = *t;
            } else {
                issue(line_of("output.cluster_tolerance"), "output.cluster_tolerance must be > 0");
            }
        }
    }

    void parse_sweep(ScenarioConfig& config, Scenario scenario) {
        const Entry* parameter = find("sweep.parameter");
        const Entry* values = find("sweep.values");
        if (!parameter && !values) return;
        if (!parameter || !values) {
            issue(parameter ? parameter->line : values->line,
                  "sweep.parameter and sweep.values must be given together");
            return;
        }
        std::vector<std::string> legal = variant_fields(scenario);
        legal.push_back(scenario == Scenario::KKDispiration ? "B0" : "omega");
        if (std::find(legal.begin(), legal.end(), parameter->value) == legal.end()) {
            issue(parameter->line, fmt::format("sweep.parameter `{}` is not a parameter of {} (choose from {})",
                                               parameter->value, geometry::to_string(scenario), join(legal)));
            return;
        }
        const auto list = real_list("sweep.values");
        if (!list) return;
        for (double v : *list) {
            try {
                ScenarioConfig probe = config;
                apply_sweep_value(probe, parameter->value, v);
            } catch (const DomainError& e) {
                issue(values->line, fmt::format("sweep value {} is invalid: {}", format_real(v), e.what()));
            }
        }
        config.sweep = SweepBlock{parameter->value, *list};
    }

public:
    static void apply_sweep_value(ScenarioConfig& config, std::string_view parameter, double value) {
        if (parameter == "omega") {
            config.field.omega = value;
            config.field.validate();
        } else if (parameter == "B0") {
            config.field.kk_field = value;
            for (double Q : config.Q_values) {
                if (!(value * Q > 0.0)) {
                    throw DomainError(fmt::format("B0 Q = {} is not positive", format_real(value * Q)));
                }
            }
        } else {
            config.defect = with_parameter(config.defect, parameter, value);
        }
    }
};

std::string format_list(const std::vector<double>& values) {
    std::string out;
    for (double v : values) {
        if (!out.empty()) out += ", ";
        out += format_real(v);
    }
    return out;
}

} // namespace

ConfigError::ConfigError(std::vector<ConfigIssue> issues)
    : std::runtime_error([&] {
          std::string message = "invalid configuration:";
          for (const ConfigIssue& i : issues) {
              message += i.line > 0 ? fmt::format("\n  line {}: {}", i.line, i.message)
                                    : fmt::format("\n  {}", i.message);
          }
          return message;
      }()),
      issues_(std::move(issues)) {}

ScenarioConfig parse_config(std::string_view text) { return Parser(text).run(); }

void apply_sweep_value(ScenarioConfig& config, std::string_view parameter, double value) {
    Parser::apply_sweep_value(config, parameter, value);
}

geometry::DefectDescriptor with_parameter(const geometry::DefectDescriptor& defect, std::string_view name,
                                          double value) {
    using namespace geometry;
    struct Visitor {
        std::string_view name;
        double value;
        DefectDescriptor operator()(const Disclination& d) const {
            if (name == "alpha") return Disclination(value);
            return fail(d);
        }
        DefectDescriptor operator()(const DisclinationDisk& d) const {
            if (name == "q") return DisclinationDisk(value, d.radius);
            if (name == "radius") return DisclinationDisk(d.density, value);
            return fail(d);
        }
        DefectDescriptor operator()(const ScrewDislocation& d) const {
            if (name == "beta") return ScrewDislocation(value, d.flux);
            if (name == "phi") return ScrewDislocation(d.beta, value);
            return fail(d);
        }
        DefectDescriptor operator()(const Dispiration& d) const {
            if (name == "alpha") return Dispiration(value, d.beta);
            if (name == "beta") return Dispiration(d.alpha, value);
            return fail(d);
        }
        DefectDescriptor operator()(const KKDispiration& d) const {
            if (name == "alpha") return KKDispiration(value, d.beta);
            if (name == "beta") return KKDispiration(d.alpha, value);
            return fail(d);
        }
        [[noreturn]] DefectDescriptor fail(const DefectDescriptor& d) const {
            throw DomainError(fmt::format("parameter `{}` is not carried by variant {}", name,
                                          to_string(scenario_of(d))));
        }
    };
    return std::visit(Visitor{name, value}, defect);
}

std::string emit_config(const ScenarioConfig& c) {
    const Scenario scenario = geometry::scenario_of(c.defect);
    std::string out = fmt::format("defect.type = {}\n", geometry::to_string(scenario));
    std::visit(
        [&](const auto& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, geometry::Disclination>) {
                out += fmt::format("defect.alpha = {}\n", format_real(d.alpha));
            } else if constexpr (std::is_same_v<T, geometry::DisclinationDisk>) {
                out += fmt::format("defect.q = {}\ndefect.radius = {}\n", format_real(d.density),
                                   format_real(d.radius));
            } else if constexpr (std::is_same_v<T, geometry::ScrewDislocation>) {
                out += fmt::format("defect.beta = {}\ndefect.phi = {}\n", format_real(d.beta), format_real(d.flux));
            } else {
                out += fmt::format("defect.alpha = {}\ndefect.beta = {}\n", format_real(d.alpha),
                                   format_real(d.beta));
            }
        },
        c.defect);
    if (scenario == Scenario::KKDispiration) {
        out += fmt::format("field.B0 = {}\n", format_real(c.field.kk_field));
    } else {
        out += fmt::format("field.omega = {}\nfield.charge_sign = {}\n", format_real(c.field.omega),
                           c.field.charge_sign);
    }
    out += fmt::format("quantum.n_max = {}\nquantum.l_min = {}\nquantum.l_max = {}\nquantum.k = {}\n", c.n_max,
                       c.l_min, c.l_max, format_list(c.k_values));
    if (scenario == Scenario::KKDispiration) out += fmt::format("quantum.Q = {}\n", format_list(c.Q_values));
    out += fmt::format("oracle.N = {}\n", c.oracle.N);
    if (c.oracle.rho_max) out += fmt::format("oracle.rho_max = {}\n", format_real(*c.oracle.rho_max));
    out += fmt::format("oracle.tolerance = {}\noracle.richardson = {}\n", format_real(c.oracle.tolerance),
                       c.oracle.richardson ? "true" : "false");
    out += fmt::format("output.format = {}\noutput.path = {}\noutput.cluster_tolerance = {}\n",
                       c.output.format == OutputFormat::Csv ? "csv" : "json", c.output.path,
                       format_real(c.output.cluster_tolerance));
    if (c.sweep) {
        out += fmt::format("sweep.parameter = {}\nsweep.values = {}\n", c.sweep->parameter,
                           format_list(c.sweep->values));
    }
    return out;
}

} // namespace landau::workbench

// landau: spectra, oracle verification, wavefunctions and sweeps from a
// scenario configuration file.
//
// Exit status: 0 success, 1 verification failure, 2 usage or configuration
// error, 3 domain or numerical error.

#include "landau/errors.hpp"
#include "landau/workbench.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace wb = landau::workbench;

namespace {

struct Common {
    std::string config_path;
    std::string output;
    std::string format;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--config", common.config_path, "Scenario configuration file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--output", common.output, "Output path, - for stdout (overrides output.path)");
    cmd->add_option("--format", common.format, "csv or json (overrides output.format)")
        ->check(CLI::IsMember({"csv", "json"}));
}

wb::ScenarioConfig load(const Common& common) {
    std::ifstream in(common.config_path, std::ios::binary);
    if (!in) throw landau::ConfigurationError("cannot read " + common.config_path);
    std::ostringstream text;
    text << in.rdbuf();
    wb::ScenarioConfig config = wb::parse_config(text.str());
    if (!common.output.empty()) config.output.path = common.output;
    if (!common.format.empty()) config.output.format = common.format == "json" ? wb::OutputFormat::Json : wb::OutputFormat::Csv;
    return config;
}

void emit(const wb::Table& table, const wb::ScenarioConfig& config) {
    if (config.output.path == "-") {
        wb::write_table(table, config.output.format, std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(config.output.path, std::ios::binary | std::ios::trunc);
    if (!out) throw landau::ConfigurationError("cannot write " + config.output.path);
    wb::write_table(table, config.output.format, out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Landau levels in defect backgrounds"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "landau 0.1.0");

    std::string seed;
    app.add_option("--seed", seed, "Rejected: every command is deterministic")->group("");

    Common common;
    auto* spectrum = app.add_subcommand("spectrum", "Closed-form energies with degeneracy clusters");
    add_common(spectrum, common);

    auto* verify = app.add_subcommand("verify", "Cross-check closed forms against the radial eigensolver");
    add_common(verify, common);

    wb::WavefunctionRequest wave;
    double wave_k = 0.0;
    double wave_Q = 0.0;
    auto* wavefunction = app.add_subcommand("wavefunction", "Sampled normalised radial eigenfunction");
    add_common(wavefunction, common);
    wavefunction->add_option("--n", wave.n, "Radial index")->required();
    wavefunction->add_option("--l", wave.l, "Angular index")->required();
    auto* k_opt = wavefunction->add_option("--k", wave_k, "Longitudinal momentum (default: first quantum.k)");
    auto* Q_opt = wavefunction->add_option("--Q", wave_Q, "KK momentum (default: first quantum.Q)");
    wavefunction->add_option("--samples", wave.samples, "Number of sample points")
        ->check(CLI::Range(1, 10000000));

    auto* sweep = app.add_subcommand("sweep", "Spectrum over the declared sweep values");
    add_common(sweep, common);

    for (auto* cmd : {spectrum, verify, wavefunction, sweep}) {
        cmd->add_option("--seed", seed, "Rejected: every command is deterministic")->group("");
    }

    CLI11_PARSE(app, argc, argv);

    if (!seed.empty()) {
        std::cerr << "error: --seed is not supported; every command is deterministic\n";
        return 2;
    }

    try {
        const wb::ScenarioConfig config = load(common);
        if (spectrum->parsed()) {
            emit(wb::run_spectrum(config), config);
        } else if (verify->parsed()) {
            const wb::VerifyResult result = wb::run_verify(config);
            emit(result.table, config);
            for (const auto& [key, value] : result.table.metadata) {
                if (key == "status" || key == "failed" || key == "max_abs_dev" || key == "max_rel_dev") {
                    std::cerr << key << '=' << std::visit([](const auto& v) {
                        std::ostringstream os;
                        os.precision(6);
                        os << v;
                        return os.str();
                    }, value) << (key == "max_rel_dev" ? "\n" : " ");
                }
            }
            return result.all_pass ? 0 : 1;
        } else if (wavefunction->parsed()) {
            if (k_opt->count() > 0) wave.k = wave_k;
            if (Q_opt->count() > 0) wave.Q = wave_Q;
            emit(wb::run_wavefunction(config, wave), config);
        } else if (sweep->parsed()) {
            emit(wb::run_sweep(config), config);
        }
    } catch (const wb::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const landau::ConfigurationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const landau::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const landau::NumericalError& e) {
        std::cerr << "error: " << e.what() << " (residual " << e.residual() << ")\n";
        return 3;
    }
    return 0;
}

#pragma once

// Configuration files and table-producing jobs behind the command-line tool.
//
// Grammar: one `section.key = value` per line, `#` starts a comment, blank
// lines are ignored. Lists are comma separated. Unknown or repeated keys are
// errors, as are keys the chosen defect variant does not carry. Only the
// `oracle.*` and `output.*` keys have defaults.
//
//   defect.type      disclination | disclination_disk | screw | dispiration | kk_dispiration
//   defect.alpha     disclination, dispiration, kk_dispiration
//   defect.q         disclination_disk (deficit-angle density)
//   defect.radius    disclination_disk
//   defect.beta      screw, dispiration, kk_dispiration
//   defect.phi       screw (internal flux)
//   field.omega      all but kk_dispiration
//   field.charge_sign  +1 or -1, all but kk_dispiration
//   field.B0         kk_dispiration only
//   quantum.n_max, quantum.l_min, quantum.l_max, quantum.k (list)
//   quantum.Q        list, kk_dispiration only
//   oracle.N = 2048, oracle.rho_max (automatic), oracle.tolerance = 1e-6,
//   oracle.richardson = true
//   output.format = csv | json (csv), output.path = - (stdout),
//   output.cluster_tolerance = 1e-9 (in units of the level spacing)
//   sweep.parameter  alpha | beta | phi | q | radius | omega | B0
//   sweep.values     list

#include "landau/analytic_spectra.hpp"
#include "landau/defect_geometry.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace landau::workbench {

enum class OutputFormat { Csv, Json };

struct OracleBlock {
    int N = 2048;
    std::optional<double> rho_max;
    double tolerance = 1e-6;
    bool richardson = true;
    bool operator==(const OracleBlock&) const = default;
};

struct OutputBlock {
    OutputFormat format = OutputFormat::Csv;
    std::string path = "-";
    double cluster_tolerance = 1e-9;
    bool operator==(const OutputBlock&) const = default;
};

struct SweepBlock {
    std::string parameter;
    std::vector<double> values;
    bool operator==(const SweepBlock&) const = default;
};

struct ScenarioConfig {
    geometry::DefectDescriptor defect{geometry::Disclination(1.0)};
    spectra::FieldConfig field;
    int n_max = 0;
    int l_min = 0;
    int l_max = 0;
    std::vector<double> k_values;
    std::vector<double> Q_values; // kk_dispiration only
    OracleBlock oracle;
    OutputBlock output;
    std::optional<SweepBlock> sweep;

    bool operator==(const ScenarioConfig&) const = default;
};

struct ConfigIssue {
    int line = 0; // 0 when the problem is a missing key
    std::string message;
};

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<ConfigIssue> issues);
    const std::vector<ConfigIssue>& issues() const noexcept { return issues_; }

private:
    std::vector<ConfigIssue> issues_;
};

/// Throws ConfigError listing every problem found.
ScenarioConfig parse_config(std::string_view text);

/// Canonical text form; parse_config(emit_config(c)) == c.
std::string emit_config(const ScenarioConfig& config);

/// Copy of `defect` with one named parameter replaced. Throws DomainError for
/// parameters the variant does not carry or values that break its invariants.
geometry::DefectDescriptor with_parameter(const geometry::DefectDescriptor& defect, std::string_view name,
                                          double value);

/// Sets a sweep parameter (a defect field, omega or B0) on `config`.
/// Throws DomainError if the value breaks an invariant.
void apply_sweep_value(ScenarioConfig& config, std::string_view parameter, double value);

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
    std::vector<std::pair<std::string, Cell>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::vector<std::string> warnings;
};

/// Columns: scenario, alpha, beta, phi, omega, charge_sign, n, l, k, Q, E,
/// E_over_omega, nu, cluster_id. Rows sorted by (k, Q, E, l, n).
Table run_spectrum(const ScenarioConfig& config);

struct VerifyResult {
    Table table;
    bool all_pass = true;
};

VerifyResult run_verify(const ScenarioConfig& config);

struct WavefunctionRequest {
    int n = 0;
    int l = 0;
    std::optional<double> k; // defaults to the first quantum.k entry
    std::optional<double> Q; // defaults to the first quantum.Q entry
    int samples = 200;
};

Table run_wavefunction(const ScenarioConfig& config, const WavefunctionRequest& request);

/// Spectrum at every sweep value, prefixed by sweep_parameter and sweep_value.
Table run_sweep(const ScenarioConfig& config);

/// CSV: leading `# key=value` and `# warning:` lines, then a header row.
/// Reals use 17 significant digits.
void write_table(const Table& table, OutputFormat format, std::ostream& out);

} // namespace landau::workbench

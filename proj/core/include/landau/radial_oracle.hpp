#pragma once

// Independent numerical check of the closed-form spectra.
//
// Every scenario separates into the radial problem
//
//     -(1/rho) d/drho (rho dR/drho) + [J^2 / rho^2 + C2 rho^2] R = (eps - C0) R,
//
// with eps = 2E. J, C0 and C2 are assembled here from the metric components
// and the vector potential, never from the spectra formulas. In the Liouville
// form u = sqrt(rho) R this reads -u'' + [(J^2 - 1/4)/rho^2 + C2 rho^2] u.
//
// Discretisation: writing R = rho^|J| f turns the operator into
// -(rho^-p)(rho^p f')' + C2 rho^2 f with p = 2|J| + 1. A cell-centred finite
// volume scheme with exact cell weights int rho^p drho gives a symmetric
// tridiagonal matrix that is second-order accurate for every J, including the
// |J| < 1 cases where plain central differences on u converge only as h^{2|J|}.

#include "landau/analytic_spectra.hpp"
#include "landau/defect_geometry.hpp"
#include "landau/tridiagonal.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace landau::oracle {

struct RadialProblem {
    geometry::Scenario scenario = geometry::Scenario::Disclination;
    double J = 0.0;  // effective angular index (sign kept, only J^2 enters)
    double C0 = 0.0; // constant shift of eps
    double C2 = 0.0; // harmonic confinement, > 0
    double exterior_radius = 0.0; // metric only valid for rho >= this (disk scenario)
    std::string description;

    /// Numerical fields only; `description` and the scenario tag are ignored.
    bool same_operator(const RadialProblem& other) const noexcept {
        return J == other.J && C0 == other.C0 && C2 == other.C2 &&
               exterior_radius == other.exterior_radius;
    }
};

struct GridSpec {
    int N = 2048;
    double rho_max = 0.0;

    /// Cell width; cell i covers [(i-1)h, ih], i = 1..N, Dirichlet beyond rho_max.
    double spacing() const noexcept { return rho_max / N; }
};

/// Throws DomainError for unbound configurations (omega <= 0, or B0 Q <= 0 for KK).
RadialProblem build_radial_problem(const geometry::DefectDescriptor& defect,
                                   const spectra::FieldConfig& field, int l, double k, double Q = 0.0);

/// Classical turning radius of radial level n: sqrt(2(2n + |J| + 1) / sqrt(C2)).
double turning_radius(const RadialProblem& problem, int n);

/// rho_max = 3 x turning radius of the highest requested level.
GridSpec default_grid(const RadialProblem& problem, int count, int N = 2048);

struct DiscreteRadialOperator {
    linalg::SymmetricTridiagonal matrix; // acts on sqrt(V_i) f_i, eigenvalues eps - C0
    std::vector<double> nodes;           // cell centres (i - 1/2) h
    std::vector<double> scaled_volume;   // log(V_i / h^{p+1})
    double J = 0.0;
    double C0 = 0.0;

    /// (H R)_i in energy units, H = (C0 + radial operator) / 2, for R sampled at `nodes`.
    std::vector<double> apply(std::span<const double> radial_values) const;

    /// ||H R - E R|| / ||R|| in the discrete L2(rho drho) norm.
    double residual(std::span<const double> radial_values, double energy) const;
};

/// Throws ConfigurationError if N < 64, count > N/4, or rho_max is below three
/// turning radii of the highest requested state (the message names the
/// required rho_max).
void check_grid(const RadialProblem& problem, int count, const GridSpec& grid);

DiscreteRadialOperator discretize(const RadialProblem& problem, const GridSpec& grid);

struct OracleSpectrum {
    std::vector<double> energies; // ascending, E = eps / 2
    std::vector<std::string> warnings;
};

/// Lowest `count` energies on one grid.
OracleSpectrum solve_eigenvalues(const RadialProblem& problem, int count, const GridSpec& grid);

/// Solves on (N, rho_max) and (2N, rho_max) and combines (4 E_2N - E_N) / 3.
OracleSpectrum solve_richardson(const RadialProblem& problem, int count, const GridSpec& grid);

struct OracleState {
    double energy = 0.0;
    std::vector<double> nodes;
    std::vector<double> values; // R(rho_i), normalised so sum R^2 rho h ~ 1
};

/// Discrete eigenfunction of level `index` (0-based) by inverse iteration.
OracleState solve_state(const RadialProblem& problem, int index, const GridSpec& grid);

struct OracleOptions {
    int N = 2048;
    std::optional<double> rho_max;
    bool richardson = true;
};

struct ValidationRow {
    spectra::QuantumNumbers qn;
    double analytic = 0.0;
    double oracle = 0.0;
    double abs_dev = 0.0;
    double rel_dev = 0.0;
    bool pass = false;
    std::string error; // oracle configuration error for this row, if any
};

struct ValidationReport {
    std::vector<ValidationRow> rows;
    double max_abs_dev = 0.0;
    double max_rel_dev = 0.0;
    bool all_pass = true;
    std::vector<std::string> warnings;
};

using AnalyticModel = std::function<double(const spectra::QuantumNumbers&)>;

struct ValidationRequest {
    int n_max = 4;
    std::vector<int> l_values;
    double k = 0.0;
    double Q = 0.0;
    double tolerance = 1e-6; // relative
    OracleOptions options;
};

/// Compares the first n_max + 1 oracle levels per l against the closed form.
/// Failures and oracle configuration errors are report content, not exceptions.
ValidationReport cross_validate(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field,
                                const ValidationRequest& request);

/// Same, with a caller-supplied analytic model (used for mutation checks).
ValidationReport cross_validate(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field,
                                const ValidationRequest& request, const AnalyticModel& analytic);

} // namespace landau::oracle

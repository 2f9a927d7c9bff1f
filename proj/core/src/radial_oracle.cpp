#include "landau/radial_oracle.hpp"

#include "landau/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace landau::oracle {

using geometry::Scenario;

namespace {

// Charge that multiplies the vector potential in the minimal coupling
// l - q A_phi. The disclination spectrum is quoted with +s (holes), the
// torsion spectra with -s, which corresponds to opposite coupling signs.
double coupling_sign(Scenario scenario, int charge_sign) {
    switch (scenario) {
    case Scenario::Disclination:
    case Scenario::DisclinationDisk: return -charge_sign;
    default: return charge_sign;
    }
}

std::string describe(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field, int l,
                     double k, double Q) {
    std::ostringstream os;
    os.precision(17);
    os << geometry::to_string(geometry::scenario_of(defect)) << " alpha=" << geometry::alpha_of(defect)
       << " beta=" << geometry::beta_of(defect) << " phi=" << geometry::flux_of(defect);
    if (geometry::scenario_of(defect) == Scenario::KKDispiration) {
        os << " B0=" << field.kk_field << " Q=" << Q;
    } else {
        os << " omega=" << field.omega << " s=" << field.charge_sign;
    }
    os << " l=" << l << " k=" << k;
    return os.str();
}

// 1 - x^m for 0 <= x < 1 without cancellation.
double one_minus_power(double x, double m) {
    if (x == 0.0) return 1.0;
    return -std::expm1(m * std::log(x));
}

struct CellCoefficients {
    std::vector<double> lower; // F_{i-1} / V_i
    std::vector<double> upper; // F_i / V_i
    std::vector<double> potential; // W_i / V_i
    std::vector<double> log_volume; // log(V_i / h^{p+1})
};

// Finite-volume coefficients for -(rho^-p)(rho^p f')' + C2 rho^2 f, all in
// ratio form so large p cannot overflow.
CellCoefficients cell_coefficients(double J, double C2, const GridSpec& grid) {
    const int N = grid.N;
    const double h = grid.spacing();
    const double p = 2.0 * std::abs(J) + 1.0;
    const double inv_h2 = 1.0 / (h * h);

    CellCoefficients c;
    c.lower.resize(N);
    c.upper.resize(N);
    c.potential.resize(N);
    c.log_volume.resize(N);
    for (int idx = 0; idx < N; ++idx) {
        const double i = idx + 1.0;
        const double x = (i - 1.0) / i;
        const double shell = one_minus_power(x, p + 1.0);
        const double base = (p + 1.0) * inv_h2 / (i * shell);
        c.upper[idx] = base; // the last face carries the Dirichlet wall
        c.lower[idx] = idx == 0 ? 0.0 : base * std::pow(x, p);
        c.potential[idx] = C2 * h * h * i * i * (p + 1.0) * one_minus_power(x, p + 3.0) / ((p + 3.0) * shell);
        c.log_volume[idx] = (p + 1.0) * std::log(i) + std::log(shell) - std::log(p + 1.0);
    }
    return c;
}

std::string disk_warning(const RadialProblem& problem, double first_node) {
    std::ostringstream os;
    os.precision(6);
    os << "grid starts at rho=" << first_node << " inside the disclination disk (R=" << problem.exterior_radius
       << "); only the exterior metric is modelled";
    return os.str();
}

} // namespace

RadialProblem build_radial_problem(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field,
                                   int l, double k, double Q) {
    const Scenario scenario = geometry::scenario_of(defect);
    const bool kk = scenario == Scenario::KKDispiration;
    if (kk) {
        if (!(field.kk_field * Q > 0.0) || !std::isfinite(field.kk_field * Q)) {
            throw DomainError("build_radial_problem: KK state with B0 Q = " + std::to_string(field.kk_field * Q) +
                              " is not confined (need B0 Q > 0)");
        }
    } else {
        field.validate();
    }

    // Everything below is read off the metric at two reference radii.
    const double r1 = 1.0;
    const double r2 = 2.0;
    const geometry::MetricSample m1 = geometry::metric_at(defect, r1, field.kk_field);
    const geometry::MetricSample m2 = geometry::metric_at(defect, r2, field.kk_field);

    const double fibre = kk ? m1.g_zz * m1.g_xx : m1.g_zz;
    // The determinant carries (beta^2 + alpha^2 rho^2) - beta^2 cancellation
    // noise, so it only certifies the descriptor's alpha, which is used exactly.
    const double alpha = geometry::alpha_of(defect);
    const double alpha_metric = std::sqrt(m1.det / (m1.g_rr * fibre)) / r1;
    if (!(std::abs(alpha_metric - alpha) <= 1e-12 * alpha * (1.0 + m1.g_pp))) {
        throw NumericalError("build_radial_problem: transverse weight disagrees with alpha",
                             std::abs(alpha_metric - alpha));
    }
    const double torsion = m1.g_zp / m1.g_zz;

    // Ring momentum p(rho) = mu - c rho^2, the phi-component of the covariant
    // derivative along the Killing direction orthogonal to the fibres.
    const double mu = l + geometry::angular_shift(torsion, geometry::flux_of(defect), k);
    double c = 0.0;
    if (kk) {
        // Fibre x with g_{x phi} = a(rho). The mode with p_x = -Q shifts the
        // ring momentum by -a(rho) p_x = a(rho) Q, so c = -a(1) Q.
        const double a1 = m1.g_xp / m1.g_xx;
        const double a2 = m2.g_xp / m2.g_xx;
        if (a2 != 4.0 * a1) {
            throw DomainError("build_radial_problem: KK gauge block is not quadratic in rho");
        }
        c = -a1 * Q / (r1 * r1);
    } else {
        // Covariant A_phi = sqrt(g_perp_phiphi) * A_hat = alpha rho * B rho / (2 alpha).
        const double covariant = alpha * r1 * geometry::uniform_field_potential(defect, field.omega, r1);
        c = coupling_sign(scenario, field.charge_sign) * covariant / (r1 * r1);
    }

    // p(rho)^2 / (alpha rho)^2 = mu^2/(alpha rho)^2 - 2 c mu / alpha^2 + c^2 rho^2 / alpha^2
    RadialProblem problem;
    problem.scenario = scenario;
    problem.J = mu / alpha;
    problem.C2 = c * c / (alpha * alpha);
    problem.C0 = k * k + (kk ? Q * Q : 0.0) - 2.0 * c * mu / (alpha * alpha);
    if (const auto* disk = std::get_if<geometry::DisclinationDisk>(&defect)) {
        problem.exterior_radius = disk->radius;
    }
    problem.description = describe(defect, field, l, k, Q);
    return problem;
}

double turning_radius(const RadialProblem& problem, int n) {
    return std::sqrt(2.0 * (2.0 * n + std::abs(problem.J) + 1.0) / std::sqrt(problem.C2));
}

GridSpec default_grid(const RadialProblem& problem, int count, int N) {
    return {N, 3.0 * turning_radius(problem, std::max(count - 1, 0))};
}

void check_grid(const RadialProblem& problem, int count, const GridSpec& grid) {
    if (grid.N < 64) {
        throw ConfigurationError("grid: N=" + std::to_string(grid.N) + " is below the minimum of 64 points");
    }
    if (count < 1 || count > grid.N / 4) {
        throw ConfigurationError("grid: requested " + std::to_string(count) + " levels, at most N/4=" +
                                 std::to_string(grid.N / 4) + " are resolved");
    }
    const double required = 3.0 * turning_radius(problem, count - 1);
    if (!(grid.rho_max >= required * (1.0 - 1e-12))) {
        std::ostringstream os;
        os.precision(17);
        os << "grid too coarse: rho_max=" << grid.rho_max << " does not contain three turning radii of level "
           << count - 1 << "; required rho_max >= " << required;
        throw ConfigurationError(os.str());
    }
}

DiscreteRadialOperator discretize(const RadialProblem& problem, const GridSpec& grid) {
    if (!(problem.C2 > 0.0)) throw DomainError("discretize: C2 must be > 0");
    const CellCoefficients c = cell_coefficients(problem.J, problem.C2, grid);
    const int N = grid.N;
    const double h = grid.spacing();

    DiscreteRadialOperator op;
    op.J = problem.J;
    op.C0 = problem.C0;
    op.nodes.resize(N);
    op.matrix.diagonal.resize(N);
    op.matrix.off_diagonal.resize(N - 1);
    for (int i = 0; i < N; ++i) {
        op.nodes[i] = (i + 0.5) * h;
        op.matrix.diagonal[i] = c.lower[i] + c.upper[i] + c.potential[i];
        if (i + 1 < N) op.matrix.off_diagonal[i] = -std::sqrt(c.upper[i] * c.lower[i + 1]);
    }
    op.scaled_volume = c.log_volume;
    return op;
}

std::vector<double> DiscreteRadialOperator::apply(std::span<const double> radial_values) const {
    const std::size_t N = nodes.size();
    if (radial_values.size() != N) throw DomainError("DiscreteRadialOperator::apply: size mismatch");
    const double a = std::abs(J);
    std::vector<double> out(N);
    for (std::size_t i = 0; i < N; ++i) {
        // Similarity transform to the R variable: T_ij (rho_i / rho_j)^|J| sqrt(V_j / V_i).
        const double diag = matrix.diagonal[i];
        double value = diag * radial_values[i];
        if (i > 0) {
            const double lower = matrix.off_diagonal[i - 1] * std::exp(0.5 * (scaled_volume[i - 1] - scaled_volume[i]));
            value += lower * std::pow(nodes[i] / nodes[i - 1], a) * radial_values[i - 1];
        }
        if (i + 1 < N) {
            const double upper = matrix.off_diagonal[i] * std::exp(0.5 * (scaled_volume[i + 1] - scaled_volume[i]));
            value += upper * std::pow(nodes[i] / nodes[i + 1], a) * radial_values[i + 1];
        }
        out[i] = 0.5 * (C0 * radial_values[i] + value);
    }
    return out;
}

double DiscreteRadialOperator::residual(std::span<const double> radial_values, double energy) const {
    const std::vector<double> hr = apply(radial_values);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double r = hr[i] - energy * radial_values[i];
        num += r * r * nodes[i];
        den += radial_values[i] * radial_values[i] * nodes[i];
    }
    return std::sqrt(num / den);
}

OracleSpectrum solve_eigenvalues(const RadialProblem& problem, int count, const GridSpec& grid) {
    check_grid(problem, count, grid);
    const DiscreteRadialOperator op = discretize(problem, grid);
    OracleSpectrum out;
    for (double lambda : linalg::lowest_eigenvalues(op.matrix, static_cast<std::size_t>(count))) {
        out.energies.push_back(0.5 * (problem.C0 + lambda));
    }
    if (problem.exterior_radius > 0.0 && op.nodes.front() < problem.exterior_radius) {
        out.warnings.push_back(disk_warning(problem, op.nodes.front()));
    }
    return out;
}

OracleSpectrum solve_richardson(const RadialProblem& problem, int count, const GridSpec& grid) {
    OracleSpectrum coarse = solve_eigenvalues(problem, count, grid);
    const OracleSpectrum fine = solve_eigenvalues(problem, count, {2 * grid.N, grid.rho_max});
    for (std::size_t i = 0; i < coarse.energies.size(); ++i) {
        coarse.energies[i] = (4.0 * fine.energies[i] - coarse.energies[i]) / 3.0;
    }
    return coarse;
}

OracleState solve_state(const RadialProblem& problem, int index, const GridSpec& grid) {
    check_grid(problem, index + 1, grid);
    const DiscreteRadialOperator op = discretize(problem, grid);
    const std::vector<double> lambdas = linalg::lowest_eigenvalues(op.matrix, static_cast<std::size_t>(index) + 1);
    const std::vector<double> v = linalg::eigenvector(op.matrix, lambdas.back());

    OracleState state;
    state.energy = 0.5 * (problem.C0 + lambdas.back());
    state.nodes = op.nodes;
    state.values.resize(v.size());
    const double a = std::abs(problem.J);
    const double h = grid.spacing();
    double norm = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        // R_i = rho_i^|J| f_i,  f_i = v_i / sqrt(V_i); common powers of h dropped.
        const double ratio = std::exp(a * std::log(i + 0.5) - 0.5 * op.scaled_volume[i]);
        state.values[i] = ratio * v[i];
        norm += state.values[i] * state.values[i] * op.nodes[i] * h;
    }
    norm = std::sqrt(norm);
    // Positive near the origin, matching the analytic convention F(-n, b, 0) = 1.
    double sign = 1.0;
    for (double value : state.values) {
        if (std::abs(value) > 1e-8 * norm) {
            sign = value < 0.0 ? -1.0 : 1.0;
            break;
        }
    }
    for (double& value : state.values) value *= sign / norm;
    return state;
}

ValidationReport cross_validate(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field,
                                const ValidationRequest& request) {
    return cross_validate(defect, field, request, [&](const spectra::QuantumNumbers& qn) {
        return spectra::energy_level(defect, field, qn).energy;
    });
}

ValidationReport cross_validate(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field,
                                const ValidationRequest& request, const AnalyticModel& analytic) {
    ValidationReport report;
    const int count = request.n_max + 1;
    for (int l : request.l_values) {
        std::vector<double> oracle_energies;
        std::string error;
        try {
            const RadialProblem problem = build_radial_problem(defect, field, l, request.k, request.Q);
            const GridSpec grid = request.options.rho_max ? GridSpec{request.options.N, *request.options.rho_max}
                                                          : default_grid(problem, count, request.options.N);
            OracleSpectrum spectrum = request.options.richardson ? solve_richardson(problem, count, grid)
                                                                 : solve_eigenvalues(problem, count, grid);
            oracle_energies = std::move(spectrum.energies);
            for (std::string& w : spectrum.warnings) {
                if (std::find(report.warnings.begin(), report.warnings.end(), w) == report.warnings.end()) {
                    report.warnings.push_back(std::move(w));
                }
            }
        } catch (const std::exception& e) {
            error = e.what();
        }

        for (int n = 0; n < count; ++n) {
            ValidationRow row;
            row.qn = {n, l, request.k, request.Q};
            try {
                row.analytic = analytic(row.qn);
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            if (row.error.empty() && !error.empty()) row.error = error;
            if (row.error.empty()) {
                row.oracle = oracle_energies[n];
                row.abs_dev = std::abs(row.oracle - row.analytic);
                row.rel_dev = row.analytic != 0.0 ? row.abs_dev / std::abs(row.analytic) : row.abs_dev;
                row.pass = row.rel_dev <= request.tolerance;
                report.max_abs_dev = std::max(report.max_abs_dev, row.abs_dev);
                report.max_rel_dev = std::max(report.max_rel_dev, row.rel_dev);
            }
            report.all_pass = report.all_pass && row.pass;
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

} // namespace landau::oracle

#include "landau/defect_geometry.hpp"

#include "landau/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace landau::geometry {

namespace {

void require_positive_alpha(double alpha, const char* who) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError(std::string(who) + ": alpha must be finite and > 0, got " +
                          std::to_string(alpha));
    }
}

void require_finite(double value, const char* who, const char* field) {
    if (!std::isfinite(value)) {
        throw DomainError(std::string(who) + ": " + field + " must be finite");
    }
}

// Determinant of a small symmetric matrix by partial-pivot elimination.
template <std::size_t N>
double determinant(std::array<std::array<double, N>, N> a) {
    double det = 1.0;
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < N; ++r) {
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        }
        if (a[pivot][col] == 0.0) return 0.0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < N; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < N; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

} // namespace

std::string_view to_string(Scenario s) noexcept {
    switch (s) {
    case Scenario::Disclination: return "disclination";
    case Scenario::DisclinationDisk: return "disclination_disk";
    case Scenario::ScrewDislocation: return "screw";
    case Scenario::Dispiration: return "dispiration";
    case Scenario::KKDispiration: return "kk_dispiration";
    }
    return "unknown";
}

Disclination::Disclination(double a) : alpha(a) { require_positive_alpha(a, "Disclination"); }

DisclinationDisk::DisclinationDisk(double q, double r) : density(q), radius(r) {
    (void)landau::geometry::effective_alpha(q, r);
}

double DisclinationDisk::effective_alpha() const noexcept { return 1.0 + 0.5 * density * radius * radius; }

ScrewDislocation::ScrewDislocation(double b, double phi) : beta(b), flux(phi) {
    require_finite(b, "ScrewDislocation", "beta");
    require_finite(phi, "ScrewDislocation", "flux");
}

Dispiration::Dispiration(double a, double b) : alpha(a), beta(b) {
    require_positive_alpha(a, "Dispiration");
    require_finite(b, "Dispiration", "beta");
}

KKDispiration::KKDispiration(double a, double b) : alpha(a), beta(b) {
    require_positive_alpha(a, "KKDispiration");
    require_finite(b, "KKDispiration", "beta");
}

double effective_alpha(double density, double radius) {
    if (!std::isfinite(density) || !std::isfinite(radius) || !(radius > 0.0)) {
        throw DomainError("effective_alpha: need finite q and R > 0 (q=" + std::to_string(density) +
                          ", R=" + std::to_string(radius) + ")");
    }
    const double alpha = 1.0 + 0.5 * density * radius * radius;
    if (!(alpha > 0.0)) {
        throw DomainError("effective_alpha: 1 + q R^2 / 2 = " + std::to_string(alpha) +
                          " is not positive (q=" + std::to_string(density) +
                          ", R=" + std::to_string(radius) + ")");
    }
    return alpha;
}

Scenario scenario_of(const DefectDescriptor& defect) noexcept {
    return static_cast<Scenario>(defect.index());
}

double alpha_of(const DefectDescriptor& defect) noexcept {
    struct Visitor {
        double operator()(const Disclination& d) const { return d.alpha; }
        double operator()(const DisclinationDisk& d) const { return d.effective_alpha(); }
        double operator()(const ScrewDislocation&) const { return 1.0; }
        double operator()(const Dispiration& d) const { return d.alpha; }
        double operator()(const KKDispiration& d) const { return d.alpha; }
    };
    return std::visit(Visitor{}, defect);
}

double beta_of(const DefectDescriptor& defect) noexcept {
    struct Visitor {
        double operator()(const Disclination&) const { return 0.0; }
        double operator()(const DisclinationDisk&) const { return 0.0; }
        double operator()(const ScrewDislocation& d) const { return d.beta; }
        double operator()(const Dispiration& d) const { return d.beta; }
        double operator()(const KKDispiration& d) const { return d.beta; }
    };
    return std::visit(Visitor{}, defect);
}

double flux_of(const DefectDescriptor& defect) noexcept {
    if (const auto* screw = std::get_if<ScrewDislocation>(&defect)) return screw->flux;
    return 0.0;
}

MetricSample metric_at(const DefectDescriptor& defect, double rho, double kk_field) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw DomainError("metric_at: rho must be finite and > 0, got " + std::to_string(rho));
    }
    const double alpha = alpha_of(defect);
    const double beta = beta_of(defect);

    MetricSample m;
    m.rho = rho;
    m.g_rr = 1.0;
    m.g_zz = 1.0;
    m.g_zp = beta;
    m.g_pp = beta * beta + alpha * alpha * rho * rho;

    if (scenario_of(defect) == Scenario::KKDispiration) {
        // (dx - B0 rho^2 / 2 dphi)^2
        const double gauge = 0.5 * kk_field * rho * rho;
        m.dimension = 4;
        m.g_xx = 1.0;
        m.g_xp = -gauge;
        m.g_pp += gauge * gauge;
        m.det = determinant<4>({{{m.g_rr, 0.0, 0.0, 0.0},
                                 {0.0, m.g_pp, m.g_zp, m.g_xp},
                                 {0.0, m.g_zp, m.g_zz, 0.0},
                                 {0.0, m.g_xp, 0.0, m.g_xx}}});
    } else {
        m.det = determinant<3>({{{m.g_rr, 0.0, 0.0}, {0.0, m.g_pp, m.g_zp}, {0.0, m.g_zp, m.g_zz}}});
    }
    m.sqrt_g = std::sqrt(m.det);
    return m;
}

double transverse_weight(const DefectDescriptor& defect, double rho) {
    const MetricSample m = metric_at(defect, rho);
    const double fibre = m.dimension == 4 ? m.g_zz * m.g_xx : m.g_zz;
    return std::sqrt(m.det / fibre);
}

SingularityData classify_singularity(const DefectDescriptor& defect) noexcept {
    const double alpha = alpha_of(defect);
    const double beta = beta_of(defect);
    SingularityData s;
    s.curvature_strength = 2.0 * std::numbers::pi * (1.0 - alpha) / alpha;
    s.torsion_strength = 2.0 * std::numbers::pi * beta;
    s.carries_curvature = alpha != 1.0;
    s.carries_torsion = beta != 0.0;
    return s;
}

double uniform_field_potential(const DefectDescriptor& defect, double field_strength, double rho) noexcept {
    return field_strength * rho / (2.0 * alpha_of(defect));
}

double cancellation_flux(double beta, double k) noexcept { return 2.0 * std::numbers::pi * (beta * k); }

double angular_shift(double beta, double flux, double k) noexcept {
    return (flux - cancellation_flux(beta, k)) / (2.0 * std::numbers::pi);
}

} // namespace landau::geometry

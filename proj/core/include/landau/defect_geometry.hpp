#pragma once

// Line-defect backgrounds written as metrics in cylindrical coordinates
// (rho, phi, z), plus the fifth coordinate x for the Kaluza-Klein case.
//
// All radial coordinates are the ones in which the transverse metric reads
// d rho^2 + alpha^2 rho^2 d phi^2; the rescaling rho -> rho^alpha / alpha used
// for the disclination disk is already applied.

#include <string_view>
#include <variant>

namespace landau::geometry {

enum class Scenario {
    Disclination,
    DisclinationDisk,
    ScrewDislocation,
    Dispiration,
    KKDispiration,
};

std::string_view to_string(Scenario s) noexcept;

/// Single wedge disclination with deficit parameter alpha (angle 2 pi alpha).
struct Disclination {
    explicit Disclination(double alpha);
    double alpha;
    bool operator==(const Disclination&) const = default;
};

/// Uniform disk of disclinations with deficit-angle density q on radius R.
/// Only the exterior solution (rho > R) is modelled.
struct DisclinationDisk {
    DisclinationDisk(double density, double radius);
    double density;
    double radius;
    double effective_alpha() const noexcept;
    bool operator==(const DisclinationDisk&) const = default;
};

/// Screw dislocation with torsion parameter beta = b / 2 pi carrying an
/// internal magnetic flux. Negative flux is accepted.
struct ScrewDislocation {
    explicit ScrewDislocation(double beta, double flux = 0.0);
    double beta;
    double flux;
    bool operator==(const ScrewDislocation&) const = default;
};

struct Dispiration {
    Dispiration(double alpha, double beta);
    double alpha;
    double beta;
    bool operator==(const Dispiration&) const = default;
};

/// Dispiration embedded in the five-dimensional Kaluza-Klein metric; the
/// magnetic field lives in the metric (see `metric_at`).
struct KKDispiration {
    KKDispiration(double alpha, double beta);
    double alpha;
    double beta;
    bool operator==(const KKDispiration&) const = default;
};

using DefectDescriptor =
    std::variant<Disclination, DisclinationDisk, ScrewDislocation, Dispiration, KKDispiration>;

Scenario scenario_of(const DefectDescriptor& defect) noexcept;

/// alpha = 1 + q R^2 / 2, the single-disclination parameter that reproduces
/// the exterior metric of a disclination disk.
/// Throws DomainError if R <= 0 or the resulting alpha is not positive.
double effective_alpha(double density, double radius);

/// Deficit parameter of the conical part of the metric (1 for the screw).
double alpha_of(const DefectDescriptor& defect) noexcept;
/// Torsion parameter (0 for the pure disclinations).
double beta_of(const DefectDescriptor& defect) noexcept;
/// Internal flux (nonzero only for the screw dislocation).
double flux_of(const DefectDescriptor& defect) noexcept;

/// Covariant metric components at one radius. Coordinates are ordered
/// (rho, phi, z, x); the x row is only populated for the KK scenario.
struct MetricSample {
    double rho = 0.0;
    int dimension = 3;
    double g_rr = 1.0;
    double g_pp = 0.0;
    double g_zz = 1.0;
    double g_zp = 0.0;
    double g_xx = 0.0;
    double g_xp = 0.0;
    double det = 0.0;
    double sqrt_g = 0.0;

    bool operator==(const MetricSample&) const = default;
};

/// Throws DomainError for rho <= 0. `kk_field` is the bare field B0 that
/// enters the g_{x phi} block of the KK metric; other scenarios ignore it.
MetricSample metric_at(const DefectDescriptor& defect, double rho, double kk_field = 0.0);

/// Area element of the (rho, phi) plane, sqrt(det g / (g_zz g_xx)).
/// Equals alpha*rho for the conical scenarios and rho for the screw.
double transverse_weight(const DefectDescriptor& defect, double rho);

struct SingularityData {
    double curvature_strength = 0.0; // 2 pi (1 - alpha) / alpha
    double torsion_strength = 0.0;   // 2 pi beta
    bool carries_curvature = false;
    bool carries_torsion = false;
};

SingularityData classify_singularity(const DefectDescriptor& defect) noexcept;

/// Orthonormal-frame component A_phi of the vector potential that produces a
/// uniform field of strength `field_strength` along z: B rho / (2 alpha).
double uniform_field_potential(const DefectDescriptor& defect, double field_strength, double rho) noexcept;

/// Shift of the angular quantum number produced by torsion and internal
/// flux at longitudinal momentum k: (Phi - 2 pi beta k) / 2 pi.
/// Written so that Phi = cancellation_flux(beta, k) gives exactly zero.
double angular_shift(double beta, double flux, double k) noexcept;

/// 2 pi beta k: the internal flux that undoes the torsion coupling.
double cancellation_flux(double beta, double k) noexcept;

} // namespace landau::geometry

#pragma once

// Closed-form radial eigenfunctions
//
//     R(rho) = C exp(-w rho^2 / 2) rho^nu F(-n, nu + 1, w rho^2),
//
// with nu = |J| and w = sqrt(C2) taken from the radial operator that the
// oracle assembles from the metric. Normalisation uses the transverse
// volume weight sqrt(g_perp) = alpha rho (rho for the screw).

#include "landau/analytic_spectra.hpp"
#include "landau/defect_geometry.hpp"
#include "landau/special_functions.hpp"

#include <string>
#include <vector>

namespace landau::wavefunction {

struct RadialProfile {
    geometry::Scenario scenario = geometry::Scenario::Disclination;
    spectra::QuantumNumbers qn;
    double nu = 0.0;
    double w = 0.0;           // Gaussian width parameter, 1/length^2
    special::KummerPoly poly{0, 1.0};
    double C = 1.0;           // 1 until normalize() runs
    double weight_slope = 1.0; // sqrt(g_perp) = weight_slope * rho
    double energy = 0.0;
    double rho_cut = 0.0;     // quadrature and sampling cutoff
    double exterior_radius = 0.0;
    bool normalized = false;
    std::vector<std::string> warnings;

    double operator()(double rho) const;
    double weight(double rho) const noexcept { return weight_slope * rho; }
    /// |R|^2 sqrt(g_perp).
    double density(double rho) const;
};

/// Throws DomainError for unbound configurations or n < 0.
RadialProfile radial_eigenfunction(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field,
                                   const spectra::QuantumNumbers& qn);

/// int_0^rho_cut R^2 sqrt(g_perp) drho by adaptive Gauss-Kronrod.
double norm_integral(const RadialProfile& profile);

/// Rescales C so that norm_integral == 1. Throws NumericalError if the
/// integral is not finite and positive.
RadialProfile normalize(const RadialProfile& profile);

/// Normalisation constant from the Laguerre orthogonality integral.
double closed_form_normalization(const RadialProfile& profile);

/// int R_a R_b sqrt(g_perp) drho; both profiles must share the weight.
double overlap(const RadialProfile& a, const RadialProfile& b);

/// Strict sign changes of R on a grid finer than a quarter of the smallest
/// gap between the zeros of the Kummer factor.
int count_nodes(const RadialProfile& profile);

struct Sample {
    double rho = 0.0;
    double R = 0.0;
    double density = 0.0;
};

/// `count` uniform points rho_i = i rho_cut / count, i = 1..count.
std::vector<Sample> sample(const RadialProfile& profile, int count);

} // namespace landau::wavefunction

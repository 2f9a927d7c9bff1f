#pragma once

// Closed-form Landau levels in the defect backgrounds. Natural units
// hbar = m = c = 1; energies scale with the cyclotron frequency omega.
//
// Charge-sign conventions (s = FieldConfig::charge_sign, +1 hole, -1 electron):
//
//   disclination     E = (omega / 2a)(2n + |l|/a + s l/a + 1) + k^2/2
//   screw            E = omega (n + |mu|/2 - s mu/2 + 1/2) + k^2/2,
//                    mu = l - beta k + Phi / 2 pi
//   dispiration      E = (omega / a)(n + |mu|/2a - s mu/2a + 1/2) + k^2/2,
//                    mu = l - beta k
//   Kaluza-Klein     E = (B0 Q / a)(n + |mu|/2a - mu/2a + 1/2) + k^2/2 + Q^2/2
//
// The disclination formula carries +s while the torsion formulas carry -s, so
// at beta = 0 the dispiration with sign s reproduces the disclination with
// sign -s (same set of levels, l mirrored).

#include "landau/defect_geometry.hpp"

#include <vector>

namespace landau::spectra {

using geometry::cancellation_flux;
using geometry::DefectDescriptor;
using geometry::Scenario;

struct FieldConfig {
    double omega = 1.0;   // cyclotron frequency |q| B / m c
    int charge_sign = -1; // +1 hole, -1 electron
    double kk_field = 0.0; // bare field B0 of the KK metric

    /// Throws DomainError unless omega > 0 and charge_sign is +-1. The KK
    /// scenario only reads kk_field and is validated per state.
    void validate() const;

    bool operator==(const FieldConfig&) const = default;
};

struct QuantumNumbers {
    int n = 0;
    int l = 0;
    double k = 0.0;
    double Q = 0.0;

    bool operator==(const QuantumNumbers&) const = default;
};

struct EnergyLevel {
    double energy = 0.0;
    QuantumNumbers qn;
    Scenario scenario = Scenario::Disclination;
    double nu = 0.0;          // effective angular index, power of rho at the origin
    double omega_eff = 0.0;   // level spacing scale (B0 Q for Kaluza-Klein)
};

EnergyLevel energy_disclination(double alpha, const FieldConfig& field, const QuantumNumbers& qn);
EnergyLevel energy_screw(double beta, double flux, const FieldConfig& field, const QuantumNumbers& qn);
EnergyLevel energy_dispiration(double alpha, double beta, const FieldConfig& field,
                               const QuantumNumbers& qn);
/// Throws DomainError unless B0 Q > 0.
EnergyLevel energy_kaluza_klein(double alpha, double beta, double kk_field, const QuantumNumbers& qn);

/// Dispatches on the defect; the disk uses its effective alpha.
EnergyLevel energy_level(const DefectDescriptor& defect, const FieldConfig& field,
                         const QuantumNumbers& qn);

/// Level spacing scale: omega, or B0 Q for the KK scenario.
double omega_effective(const DefectDescriptor& defect, const FieldConfig& field, double Q);

struct LevelCluster {
    double energy = 0.0; // lowest member energy
    double spread = 0.0; // max - min over members
    std::vector<QuantumNumbers> members;
};

struct DegeneracyReport {
    std::vector<LevelCluster> clusters;
    std::size_t level_count = 0;
};

struct LevelWindow {
    int n_max = 0;
    int l_min = 0;
    int l_max = 0;
    double k = 0.0;
    double Q = 0.0;
};

/// Enumerates n in [0, n_max], l in [l_min, l_max] and groups the energies by
/// single-link clustering over the sorted list: a new cluster starts whenever
/// the gap to the previous level reaches `tolerance`.
/// Throws DomainError for empty ranges or tolerance <= 0.
DegeneracyReport degeneracy_report(const DefectDescriptor& defect, const FieldConfig& field,
                                   const LevelWindow& window, double tolerance);

/// Default clustering tolerance, 1e-9 omega.
double default_cluster_tolerance(double omega);

} // namespace landau::spectra

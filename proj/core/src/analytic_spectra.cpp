#include "landau/analytic_spectra.hpp"

#include "landau/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace landau::spectra {

namespace {

void require_alpha(double alpha, const char* who) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError(std::string(who) + ": alpha must be > 0, got " + std::to_string(alpha));
    }
}

void require_n(const QuantumNumbers& qn, const char* who) {
    if (qn.n < 0) throw DomainError(std::string(who) + ": radial index n must be >= 0");
}

// omega (n + |mu|/(2a) - s mu/(2a) + 1/2) / a + k^2/2, shared by the torsion formulas.
double torsion_ladder(double omega, double alpha, int sign, int n, double mu) {
    return (omega / alpha) * (n + std::abs(mu) / (2.0 * alpha) - sign * mu / (2.0 * alpha) + 0.5);
}

} // namespace

void FieldConfig::validate() const {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("FieldConfig: omega must be > 0, got " + std::to_string(omega));
    }
    if (charge_sign != 1 && charge_sign != -1) {
        throw DomainError("FieldConfig: charge_sign must be +1 or -1, got " + std::to_string(charge_sign));
    }
}

EnergyLevel energy_disclination(double alpha, const FieldConfig& field, const QuantumNumbers& qn) {
    require_alpha(alpha, "energy_disclination");
    require_n(qn, "energy_disclination");
    field.validate();
    const double l = qn.l;
    const double s = field.charge_sign;
    EnergyLevel level;
    level.energy = (field.omega / (2.0 * alpha)) * (2.0 * qn.n + std::abs(l) / alpha + s * l / alpha + 1.0) +
                   0.5 * qn.k * qn.k;
    level.qn = qn;
    level.scenario = Scenario::Disclination;
    level.nu = std::abs(l) / alpha;
    level.omega_eff = field.omega;
    return level;
}

EnergyLevel energy_screw(double beta, double flux, const FieldConfig& field, const QuantumNumbers& qn) {
    require_n(qn, "energy_screw");
    field.validate();
    const double mu = qn.l + geometry::angular_shift(beta, flux, qn.k);
    EnergyLevel level;
    level.energy = torsion_ladder(field.omega, 1.0, field.charge_sign, qn.n, mu) + 0.5 * qn.k * qn.k;
    level.qn = qn;
    level.scenario = Scenario::ScrewDislocation;
    level.nu = std::abs(mu);
    level.omega_eff = field.omega;
    return level;
}

EnergyLevel energy_dispiration(double alpha, double beta, const FieldConfig& field,
                               const QuantumNumbers& qn) {
    require_alpha(alpha, "energy_dispiration");
    require_n(qn, "energy_dispiration");
    field.validate();
    const double mu = qn.l + geometry::angular_shift(beta, 0.0, qn.k);
    EnergyLevel level;
    level.energy = torsion_ladder(field.omega, alpha, field.charge_sign, qn.n, mu) + 0.5 * qn.k * qn.k;
    level.qn = qn;
    level.scenario = Scenario::Dispiration;
    level.nu = std::abs(mu) / alpha;
    level.omega_eff = field.omega;
    return level;
}

EnergyLevel energy_kaluza_klein(double alpha, double beta, double kk_field, const QuantumNumbers& qn) {
    require_alpha(alpha, "energy_kaluza_klein");
    require_n(qn, "energy_kaluza_klein");
    const double omega = kk_field * qn.Q;
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("energy_kaluza_klein: B0 Q = " + std::to_string(omega) +
                          " must be > 0 for bound Landau states (B0=" + std::to_string(kk_field) +
                          ", Q=" + std::to_string(qn.Q) + ")");
    }
    const double mu = qn.l + geometry::angular_shift(beta, 0.0, qn.k);
    EnergyLevel level;
    level.energy = torsion_ladder(omega, alpha, +1, qn.n, mu) + 0.5 * qn.k * qn.k + 0.5 * qn.Q * qn.Q;
    level.qn = qn;
    level.scenario = Scenario::KKDispiration;
    level.nu = std::abs(mu) / alpha;
    level.omega_eff = omega;
    return level;
}

EnergyLevel energy_level(const DefectDescriptor& defect, const FieldConfig& field, const QuantumNumbers& qn) {
    struct Visitor {
        const FieldConfig& field;
        const QuantumNumbers& qn;
        EnergyLevel operator()(const geometry::Disclination& d) const {
            return energy_disclination(d.alpha, field, qn);
        }
        EnergyLevel operator()(const geometry::DisclinationDisk& d) const {
            EnergyLevel level = energy_disclination(d.effective_alpha(), field, qn);
            level.scenario = Scenario::DisclinationDisk;
            return level;
        }
        EnergyLevel operator()(const geometry::ScrewDislocation& d) const {
            return energy_screw(d.beta, d.flux, field, qn);
        }
        EnergyLevel operator()(const geometry::Dispiration& d) const {
            return energy_dispiration(d.alpha, d.beta, field, qn);
        }
        EnergyLevel operator()(const geometry::KKDispiration& d) const {
            return energy_kaluza_klein(d.alpha, d.beta, field.kk_field, qn);
        }
    };
    return std::visit(Visitor{field, qn}, defect);
}

double omega_effective(const DefectDescriptor& defect, const FieldConfig& field, double Q) {
    return geometry::scenario_of(defect) == Scenario::KKDispiration ? field.kk_field * Q : field.omega;
}

double default_cluster_tolerance(double omega) { return 1e-9 * omega; }

DegeneracyReport degeneracy_report(const DefectDescriptor& defect, const FieldConfig& field,
                                   const LevelWindow& window, double tolerance) {
    if (window.n_max < 0 || window.l_min > window.l_max) {
        throw DomainError("degeneracy_report: empty quantum-number range (n_max=" + std::to_string(window.n_max) +
                          ", l in [" + std::to_string(window.l_min) + ", " + std::to_string(window.l_max) + "])");
    }
    if (!(tolerance > 0.0)) throw DomainError("degeneracy_report: energy tolerance must be > 0");

    std::vector<EnergyLevel> levels;
    for (int n = 0; n <= window.n_max; ++n) {
        for (int l = window.l_min; l <= window.l_max; ++l) {
            levels.push_back(energy_level(defect, field, {n, l, window.k, window.Q}));
        }
    }
    std::sort(levels.begin(), levels.end(), [](const EnergyLevel& a, const EnergyLevel& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        if (a.qn.l != b.qn.l) return a.qn.l < b.qn.l;
        return a.qn.n < b.qn.n;
    });

    DegeneracyReport report;
    report.level_count = levels.size();
    double previous = 0.0;
    for (const EnergyLevel& level : levels) {
        if (report.clusters.empty() || level.energy - previous >= tolerance) {
            report.clusters.push_back({level.energy, 0.0, {}});
        }
        LevelCluster& cluster = report.clusters.back();
        cluster.members.push_back(level.qn);
        cluster.spread = level.energy - cluster.energy;
        previous = level.energy;
    }
    return report;
}

} // namespace landau::spectra

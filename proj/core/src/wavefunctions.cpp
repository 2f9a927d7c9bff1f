#include "landau/wavefunctions.hpp"

#include "landau/errors.hpp"
#include "landau/radial_oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace landau::wavefunction {

namespace {

template <class F>
double integrate(F&& f, double upper) {
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    // 1e-14 is below what the Kronrod estimate can certify and only burns
    // recursion depth; 1e-13 already lands within 1e-14 of the closed form.
    return gauss_kronrod<double, 61>::integrate(f, 0.0, upper, 20, 1e-13, &error);
}

} // namespace

double RadialProfile::operator()(double rho) const {
    if (rho == 0.0) return nu == 0.0 ? C * poly(0.0) : 0.0;
    const double x = w * rho * rho;
    return C * std::exp(-0.5 * x + nu * std::log(rho)) * poly(x);
}

double RadialProfile::density(double rho) const {
    const double r = (*this)(rho);
    return r * r * weight(rho);
}

RadialProfile radial_eigenfunction(const geometry::DefectDescriptor& defect, const spectra::FieldConfig& field,
                                   const spectra::QuantumNumbers& qn) {
    if (qn.n < 0) throw DomainError("radial_eigenfunction: radial index n must be >= 0");
    const oracle::RadialProblem problem = oracle::build_radial_problem(defect, field, qn.l, qn.k, qn.Q);

    RadialProfile p;
    p.scenario = problem.scenario;
    p.qn = qn;
    p.nu = std::abs(problem.J);
    p.w = std::sqrt(problem.C2);
    p.poly = special::KummerPoly(qn.n, p.nu + 1.0);
    p.weight_slope = geometry::transverse_weight(defect, 1.0);
    p.energy = spectra::energy_level(defect, field, qn).energy;
    p.rho_cut = std::max(3.0 * oracle::turning_radius(problem, qn.n), 10.0 / std::sqrt(p.w));
    p.exterior_radius = problem.exterior_radius;
    if (p.exterior_radius > 0.0) {
        std::ostringstream os;
        os.precision(6);
        os << "profile extends into rho < R=" << p.exterior_radius
           << " where only the exterior disclination metric is modelled";
        p.warnings.push_back(os.str());
    }
    return p;
}

double norm_integral(const RadialProfile& profile) {
    return integrate([&](double rho) { return profile.density(rho); }, profile.rho_cut);
}

RadialProfile normalize(const RadialProfile& profile) {
    const double integral = norm_integral(profile);
    if (!std::isfinite(integral) || !(integral > 0.0)) {
        throw NumericalError("normalize: norm integral is " + std::to_string(integral), integral);
    }
    RadialProfile out = profile;
    out.C = profile.C / std::sqrt(integral);
    out.normalized = true;
    return out;
}

double closed_form_normalization(const RadialProfile& p) {
    // int t^nu e^-t F^2 dt = n! Gamma(nu+1)^2 / Gamma(n+nu+1), with t = w rho^2.
    const double n = p.qn.n;
    const double log_integral = std::log(p.weight_slope) + std::lgamma(n + 1.0) + 2.0 * std::lgamma(p.nu + 1.0) -
                                std::log(2.0) - (p.nu + 1.0) * std::log(p.w) - std::lgamma(n + p.nu + 1.0);
    return std::exp(-0.5 * log_integral);
}

double overlap(const RadialProfile& a, const RadialProfile& b) {
    return integrate([&](double rho) { return a(rho) * b(rho) * a.weight(rho); },
                     std::max(a.rho_cut, b.rho_cut));
}

int count_nodes(const RadialProfile& profile) {
    double step = profile.rho_cut / 256.0;
    double previous = 0.0;
    for (double x : profile.poly.zeros()) {
        const double root = std::sqrt(x / profile.w);
        step = std::min(step, 0.25 * (root - previous));
        previous = root;
    }
    if (previous > 0.0) step = std::min(step, 0.25 * (profile.rho_cut - previous));

    const auto count = static_cast<long>(std::ceil(profile.rho_cut / step));
    int nodes = 0;
    int last_sign = 0;
    for (long i = 1; i <= count; ++i) {
        const double value = profile(profile.rho_cut * static_cast<double>(i) / static_cast<double>(count));
        const int sign = (value > 0.0) - (value < 0.0);
        if (sign == 0) continue;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

std::vector<Sample> sample(const RadialProfile& profile, int count) {
    if (count < 1) throw DomainError("sample: need at least one sample point");
    std::vector<Sample> out;
    out.reserve(count);
    for (int i = 1; i <= count; ++i) {
        const double rho = profile.rho_cut * i / count;
        const double r = profile(rho);
        out.push_back({rho, r, r * r * profile.weight(rho)});
    }
    return out;
}

} // namespace landau::wavefunction

#include "landau/special_functions.hpp"

#include "double_double.hpp"
#include "landau/errors.hpp"
#include "landau/tridiagonal.hpp"

#include <cmath>
#include <string>

namespace landau::special {

using detail::DoubleDouble;

KummerPoly::KummerPoly(int n, double b) : n_(n), b_(b) {
    if (n < 0) throw DomainError("kummer_poly: degree n must be >= 0, got " + std::to_string(n));
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw DomainError("kummer_poly: parameter b must be > 0, got " + std::to_string(b));
    }
    hi_.resize(static_cast<std::size_t>(n) + 1);
    lo_.resize(hi_.size());

    // c_{j+1} = c_j (j - n) / ((b + j)(j + 1))
    DoubleDouble c(1.0);
    hi_[0] = 1.0;
    lo_[0] = 0.0;
    for (int j = 0; j < n; ++j) {
        const DoubleDouble num(static_cast<double>(j - n));
        const DoubleDouble den = detail::two_sum(b, static_cast<double>(j)) * DoubleDouble(j + 1.0);
        c = c * num / den;
        hi_[j + 1] = c.hi;
        lo_[j + 1] = c.lo;
    }
}

double KummerPoly::operator()(double x) const {
    DoubleDouble acc(hi_[n_], lo_[n_]);
    for (int j = n_ - 1; j >= 0; --j) acc = acc * DoubleDouble(x) + DoubleDouble(hi_[j], lo_[j]);
    return acc.value();
}

double KummerPoly::derivative(double x) const {
    if (n_ == 0) return 0.0;
    DoubleDouble acc = DoubleDouble(hi_[n_], lo_[n_]) * DoubleDouble(static_cast<double>(n_));
    for (int j = n_ - 1; j >= 1; --j) {
        acc = acc * DoubleDouble(x) + DoubleDouble(hi_[j], lo_[j]) * DoubleDouble(static_cast<double>(j));
    }
    return acc.value();
}

double KummerPoly::magnitude(double x) const {
    double acc = 0.0;
    const double ax = std::abs(x);
    for (int j = n_; j >= 0; --j) acc = acc * ax + std::abs(hi_[j]);
    return acc;
}

std::vector<double> KummerPoly::zeros() const {
    if (n_ == 0) return {};
    // Jacobi matrix of L_n^{(g)}, g = b - 1: diagonal 2i + g + 1,
    // off-diagonal sqrt(i (i + g)).
    const double g = b_ - 1.0;
    linalg::SymmetricTridiagonal t;
    t.diagonal.resize(n_);
    t.off_diagonal.resize(n_ - 1);
    for (int i = 0; i < n_; ++i) t.diagonal[i] = 2.0 * i + g + 1.0;
    for (int i = 1; i < n_; ++i) t.off_diagonal[i - 1] = std::sqrt(i * (i + g));
    return linalg::lowest_eigenvalues(t, static_cast<std::size_t>(n_));
}

KummerPoly kummer_poly(int n, double b) { return KummerPoly(n, b); }

double kummer_series(double a, double b, double x) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x)) {
        throw DomainError("kummer_series: arguments must be finite");
    }
    if (b <= 0.0 && b == std::floor(b)) {
        throw DomainError("kummer_series: b must not be a non-positive integer, got " + std::to_string(b));
    }
    if (x < 0.0) throw DomainError("kummer_series: x must be >= 0, got " + std::to_string(x));

    constexpr int kMaxTerms = 500;
    DoubleDouble sum(1.0);
    DoubleDouble term(1.0);
    double last_ratio = 1.0;
    for (int j = 0; j < kMaxTerms; ++j) {
        const DoubleDouble num = detail::two_sum(a, static_cast<double>(j)) * DoubleDouble(x);
        const DoubleDouble den = detail::two_sum(b, static_cast<double>(j)) * DoubleDouble(j + 1.0);
        term = term * num / den;
        sum = sum + term;
        if (term.hi == 0.0) return sum.value();
        last_ratio = std::abs(term.hi) / std::abs(sum.hi);
        if (std::abs(term.hi) < 1e-16 * std::abs(sum.hi)) return sum.value();
    }
    throw NumericalError("kummer_series: no convergence within 500 terms (a=" + std::to_string(a) +
                             ", b=" + std::to_string(b) + ", x=" + std::to_string(x) + ")",
                         last_ratio);
}

} // namespace landau::special

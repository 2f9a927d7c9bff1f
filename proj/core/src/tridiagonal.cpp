#include "landau/tridiagonal.hpp"

#include "landau/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace landau::linalg {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Bounds {
    double lower;
    double upper;
};

Bounds gershgorin(const SymmetricTridiagonal& t) {
    const std::size_t n = t.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(t.off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(t.off_diagonal[i]);
        lo = std::min(lo, t.diagonal[i] - radius);
        hi = std::max(hi, t.diagonal[i] + radius);
    }
    return {lo, hi};
}

void check_shape(const SymmetricTridiagonal& t) {
    if (t.size() == 0 || t.off_diagonal.size() + 1 != t.size()) {
        throw DomainError("SymmetricTridiagonal: off-diagonal must have size n-1 with n >= 1");
    }
}

} // namespace

std::size_t sturm_count(const SymmetricTridiagonal& t, double shift) {
    const std::size_t n = t.size();
    // Pivot floor keeps the recurrence finite when a pivot vanishes exactly.
    const double tiny = std::numeric_limits<double>::min() / kEps;
    std::size_t negatives = 0;
    double q = t.diagonal[0] - shift;
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++negatives;
    for (std::size_t i = 1; i < n; ++i) {
        const double e = t.off_diagonal[i - 1];
        q = (t.diagonal[i] - shift) - e * e / q;
        if (q == 0.0) q = -tiny;
        if (q < 0.0) ++negatives;
    }
    return negatives;
}

std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t count) {
    check_shape(t);
    if (count > t.size()) {
        throw DomainError("lowest_eigenvalues: requested more eigenvalues than the matrix order");
    }
    const Bounds b = gershgorin(t);
    const double scale = std::max(std::abs(b.lower), std::abs(b.upper));
    const double abs_tol = 2.0 * kEps * scale;

    std::vector<double> values;
    values.reserve(count);
    double floor = b.lower;
    for (std::size_t k = 0; k < count; ++k) {
        // Find the smallest x with sturm_count(x) > k.
        double lo = floor;
        double hi = b.upper;
        while (hi - lo > abs_tol + 2.0 * kEps * std::max(std::abs(lo), std::abs(hi))) {
            const double mid = lo + 0.5 * (hi - lo);
            if (mid <= lo || mid >= hi) break;
            if (sturm_count(t, mid) > k) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        const double lambda = lo + 0.5 * (hi - lo);
        values.push_back(lambda);
        floor = lo;
    }
    return values;
}

std::vector<double> eigenvector(const SymmetricTridiagonal& t, double eigenvalue) {
    check_shape(t);
    const std::size_t n = t.size();
    const Bounds b = gershgorin(t);
    const double scale = std::max(std::abs(b.lower), std::abs(b.upper));
    const double shift = eigenvalue + 64.0 * kEps * scale;

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> c(n), d(n);
    for (int sweep = 0; sweep < 4; ++sweep) {
        // Thomas algorithm for (T - shift) y = x.
        double pivot = t.diagonal[0] - shift;
        if (pivot == 0.0) pivot = kEps * scale;
        c[0] = n > 1 ? t.off_diagonal[0] / pivot : 0.0;
        d[0] = x[0] / pivot;
        for (std::size_t i = 1; i < n; ++i) {
            const double e = t.off_diagonal[i - 1];
            pivot = (t.diagonal[i] - shift) - e * c[i - 1];
            if (pivot == 0.0) pivot = kEps * scale;
            c[i] = i + 1 < n ? t.off_diagonal[i] / pivot : 0.0;
            d[i] = (x[i] - e * d[i - 1]) / pivot;
        }
        x[n - 1] = d[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];

        const double norm = std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
        for (double& v : x) v /= norm;
    }
    // Fix the sign so the largest component is positive.
    const auto big = std::max_element(x.begin(), x.end(),
                                      [](double a, double b2) { return std::abs(a) < std::abs(b2); });
    if (*big < 0.0) {
        for (double& v : x) v = -v;
    }
    return x;
}

} // namespace landau::linalg

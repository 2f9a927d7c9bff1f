#include "landau/tridiagonal.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using landau::linalg::eigenvector;
using landau::linalg::lowest_eigenvalues;
using landau::linalg::sturm_count;
using landau::linalg::SymmetricTridiagonal;

namespace {

// Second-difference matrix tridiag(-1, 2, -1) of size n; eigenvalues are
// 2 - 2 cos(j pi / (n + 1)).
SymmetricTridiagonal laplacian(std::size_t n) {
    return {std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
}

} // namespace

TEST_CASE("sturm count brackets the Laplacian spectrum") {
    const auto t = laplacian(50);
    CHECK(sturm_count(t, -0.1) == 0);
    CHECK(sturm_count(t, 4.1) == 50);
    CHECK(sturm_count(t, 2.0 - 2.0 * std::cos(10.5 * std::numbers::pi / 51.0)) == 10);
}

TEST_CASE("lowest eigenvalues by bisection") {
    const std::size_t n = 200;
    const auto values = lowest_eigenvalues(laplacian(n), 12);
    REQUIRE(values.size() == 12);
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double exact = 2.0 - 2.0 * std::cos((j + 1.0) * std::numbers::pi / (n + 1.0));
        CHECK(values[j] == doctest::Approx(exact).epsilon(1e-12));
        if (j > 0) CHECK(values[j] > values[j - 1]);
    }
}

TEST_CASE("eigenvector by inverse iteration") {
    const std::size_t n = 64;
    const auto t = laplacian(n);
    const auto values = lowest_eigenvalues(t, 3);
    const auto v = eigenvector(t, values[2]);
    double norm = 0.0;
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        norm += v[i] * v[i];
        double tv = t.diagonal[i] * v[i];
        if (i > 0) tv += t.off_diagonal[i - 1] * v[i - 1];
        if (i + 1 < n) tv += t.off_diagonal[i] * v[i + 1];
        residual += (tv - values[2] * v[i]) * (tv - values[2] * v[i]);
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::sqrt(residual) < 1e-10);
}

TEST_CASE("bisection is deterministic") {
    const auto t = laplacian(333);
    CHECK(lowest_eigenvalues(t, 7) == lowest_eigenvalues(t, 7));
}

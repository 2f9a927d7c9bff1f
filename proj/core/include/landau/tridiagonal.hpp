#pragma once

#include <cstddef>
#include <vector>

namespace landau::linalg {

/// Real symmetric tridiagonal matrix. `off_diagonal[i]` couples rows i and i+1.
struct SymmetricTridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    std::size_t size() const noexcept { return diagonal.size(); }
};

/// Number of eigenvalues strictly below `shift` (Sturm sequence count of the
/// LDL^T factorisation of T - shift).
std::size_t sturm_count(const SymmetricTridiagonal& t, double shift);

/// The `count` smallest eigenvalues in ascending order, by bisection on the
/// Sturm count. Each value is bracketed to a few ulps of the Gershgorin scale.
std::vector<double> lowest_eigenvalues(const SymmetricTridiagonal& t, std::size_t count);

/// Unit eigenvector for an eigenvalue previously computed by bisection,
/// by inverse iteration with a slightly perturbed shift.
std::vector<double> eigenvector(const SymmetricTridiagonal& t, double eigenvalue);

} // namespace landau::linalg

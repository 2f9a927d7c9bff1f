#pragma once

#include <span>
#include <vector>

namespace landau::special {

/// The terminating confluent hypergeometric function
///
///     F(-n, b, x) = sum_{j=0}^{n} (-n)_j / ((b)_j j!) x^j .
///
/// Coefficients come from the forward ratio recurrence and are kept in
/// double-double precision; evaluation is Horner's scheme in the same
/// precision. For n ~ 30 and x ~ 50 the individual terms exceed the result
/// by fifteen orders of magnitude, so plain double Horner loses every digit.
class KummerPoly {
public:
    /// Throws DomainError unless n >= 0 and b > 0.
    KummerPoly(int n, double b);

    int degree() const noexcept { return n_; }
    double b() const noexcept { return b_; }

    /// Coefficients rounded to double, lowest order first; coefficient 0 is 1.
    std::span<const double> coefficients() const noexcept { return hi_; }

    double operator()(double x) const;
    double derivative(double x) const;

    /// sum_j |c_j| x^j, the magnitude a plain double evaluation is relative to.
    double magnitude(double x) const;

    /// Positive zeros in ascending order. They coincide with the zeros of the
    /// generalised Laguerre polynomial L_n^{(b-1)} and are found as eigenvalues
    /// of its Jacobi matrix.
    std::vector<double> zeros() const;

private:
    int n_;
    double b_;
    std::vector<double> hi_;
    std::vector<double> lo_;
};

KummerPoly kummer_poly(int n, double b);

/// Kummer's M(a, b, x) by direct partial summation, stopping once a term falls
/// below 1e-16 of the running sum (at most 500 terms). Accumulated in
/// double-double so terminating series reproduce `KummerPoly`.
/// Throws DomainError if b is a non-positive integer or x < 0, and
/// NumericalError (carrying the last relative term size) on non-convergence.
double kummer_series(double a, double b, double x);

} // namespace landau::special

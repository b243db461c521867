#pragma once

// Bessel functions of the first kind of order one, modified (I1) and
// unmodified (J1), by their ascending power series
//   I1(x) =  sum_{k>=0} (x/2)^{2k+1} / (k! (k+1)!)
//   J1(x) =  sum_{k>=0} (-1)^k (x/2)^{2k+1} / (k! (k+1)!)
// Arguments here stay below ~4*pi*sqrt(r*r') at desk scale, where the series
// is stable in 80-bit accumulation; no asymptotic branches.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gamma0::special {

struct SeriesEvalPolicy {
    double absolute_tolerance = 1e-15;
    long max_terms = 512;
};

// Thrown when max_terms is exhausted before the terms drop under tolerance.
// Carries the partial sum and a geometric bound on the dropped tail.
struct TruncationError : std::runtime_error {
    double partial_value;
    double tail_bound;
    TruncationError(double partial, double bound)
        : std::runtime_error("series truncated before convergence; partial=" +
                             std::to_string(partial) + " tail_bound=" + std::to_string(bound)),
          partial_value(partial), tail_bound(bound) {}
};

namespace detail {

// sign = +1 for I1, -1 for J1. Terms obey
//   t_{k+1} = t_k * sign * (x^2/4) / ((k+1)(k+2)),   t_0 = x/2,
// added in ascending k until the next term falls below tolerance.
inline double bessel_order1_series(double x, int sign, const SeriesEvalPolicy& policy) {
    if (!(x >= 0.0)) throw std::domain_error("bessel: argument must be >= 0");
    if (!(policy.absolute_tolerance > 0.0))
        throw std::domain_error("bessel: tolerance must be positive");
    if (policy.max_terms < 1) throw std::domain_error("bessel: max_terms must be >= 1");

    const long double q = static_cast<long double>(x) * static_cast<long double>(x) / 4.0L;
    long double term = static_cast<long double>(x) / 2.0L;
    long double acc = 0.0L;
    long k = 0;
    for (; k < policy.max_terms; ++k) {
        if (fabsl(term) < static_cast<long double>(policy.absolute_tolerance))
            return static_cast<double>(acc);
        acc += term;
        term *= static_cast<long double>(sign) * q
              / (static_cast<long double>(k + 1) * static_cast<long double>(k + 2));
    }
    const long double rho = q / (static_cast<long double>(k + 1) * static_cast<long double>(k + 2));
    const double tail = rho < 1.0L
        ? static_cast<double>(fabsl(term) / (1.0L - rho))
        : std::numeric_limits<double>::infinity();
    throw TruncationError(static_cast<double>(acc), tail);
}

} // namespace detail

inline double bessel_i1(double x, const SeriesEvalPolicy& policy = {}) {
    return detail::bessel_order1_series(x, +1, policy);
}

inline double bessel_j1(double x, const SeriesEvalPolicy& policy = {}) {
    return detail::bessel_order1_series(x, -1, policy);
}

} // namespace gamma0::special

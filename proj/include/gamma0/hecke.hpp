#pragma once

// Hecke operators T_k(m) on q-expansions at level N, with the coprimality
// convention gcd(d, N) = 1 on the divisor sum:
//   b(n) = sum_{d | gcd(m,n), gcd(d,N)=1} d^{k-1} a(m n / d^2).
// Coefficients of T_k(m)f are justified only up to floor(P/m): b(n) reads
// a(mn), so nothing past the input's trust window is fabricated.

#include "qseries.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace gamma0::hecke {

using qseries::LaurentSeries;

struct ModularFormExpansion {
    long weight;
    long long level;
    LaurentSeries series;
};

inline ModularFormExpansion hecke_apply(long k, long long m, const ModularFormExpansion& f) {
    if (m < 1) throw std::domain_error("hecke_apply: index m must be >= 1");
    if (!f.series.is_zero() && f.series.valuation() < 0)
        throw std::domain_error("hecke_apply: holomorphic expansions only (valuation >= 0)");
    const long P = f.series.precision();
    const long outP = static_cast<long>(P / m);
    if (outP < 1)
        throw std::domain_error("hecke_apply: input precision " + std::to_string(P) +
                                " too small for T(" + std::to_string(m) + ")");
    std::vector<Rational> b(static_cast<size_t>(outP), Rational(0));
    for (long n = 0; n < outP; ++n) {
        Rational acc(0);
        // gcd(0, m) = m covers b(0) = sum over all coprime d | m of d^{k-1} a(0)
        for (long long d : arith::divisors(std::gcd(static_cast<long long>(n), m))) {
            if (std::gcd(d, f.level) != 1) continue;
            acc += rational_pow(Rational(d), k - 1) *
                   f.series.coefficient(static_cast<long>(m * n / (d * d)));
        }
        b[static_cast<size_t>(n)] = acc;
    }
    return {k, f.level, LaurentSeries(0, std::move(b), outP)};
}

// (eta(z) eta(11z))^2 = q prod (1-q^n)^2 (1-q^{11n})^2, the weight-2 level-11
// cusp form used as the Hecke test fixture.
inline ModularFormExpansion eta_square_form(long long N, long P) {
    if (N != 11) throw std::domain_error("eta_square_form: fixture exists at level 11 only");
    return {2, 11, qseries::eta_expand(qseries::EtaQuotient{{{1, 2}, {11, 2}}}, P)};
}

} // namespace gamma0::hecke

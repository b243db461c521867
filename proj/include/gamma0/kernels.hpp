#pragma once

// Fourier data of the modular kernel: the weight-2 Eisenstein row (exact
// rationals via a closed form, plus the literal truncated double sum), the
// Poincare coefficients p_{r',N}(r) as Kloosterman-Bessel sums over moduli
// c = 0 (mod N), and the assembled two-variable expansion over a box.

#include "arith.hpp"
#include "biseries.hpp"
#include "hauptmodul.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "special.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gamma0::kernels {

using qseries::BiSeries;

// e_{r,N} in closed form: -24 r * sum_{l | r} mu(N_l) / (l * N_l^2 *
// prod_{p | N_l} (1 - p^{-2})), with N_l = N / gcd(N, l). The pi^2 of the
// literal sum cancels against zeta(2).
inline Rational eisenstein_exact(long long N, long long r) {
    arith::require_positive(N, "eisenstein_exact level");
    arith::require_positive(r, "eisenstein_exact index");
    Rational total(0);
    for (long long l : arith::divisors(r)) {
        long long Nl = N / std::gcd(N, l);
        int mu = arith::mobius(Nl);
        if (!mu) continue;
        Rational denom = Rational(l) * Rational(Nl) * Rational(Nl);
        for (long long p : arith::prime_divisors(Nl))
            denom *= Rational(p * p - 1) / Rational(p * p);
        total += Rational(mu) / denom;
    }
    return Rational(-24) * Rational(r) * total;
}

// Multiplier of 1/(pi * Im z1) in the kernel's non-holomorphic term.
inline Rational nonholomorphic_coefficient(long long N) {
    arith::require_positive(N, "nonholomorphic_coefficient");
    return Rational(-3) * Rational(arith::dedekind_psi(N)) / Rational(N * N);
}

struct EisensteinExpansion {
    long long level;
    Rational constant_term;        // always 1
    Rational nonholo_coefficient;  // -3 * psi(N) / N^2
    std::vector<Rational> coefficients; // e_{1,N} .. e_{R,N}
};

inline EisensteinExpansion eisenstein_expansion(long long N, long long R) {
    arith::require_positive(N, "eisenstein_expansion level");
    EisensteinExpansion e{N, Rational(1), nonholomorphic_coefficient(N), {}};
    for (long long r = 1; r <= R; ++r) e.coefficients.push_back(eisenstein_exact(N, r));
    return e;
}

struct EisensteinPartialSum {
    double value;
    double tail_bound;
    long long c_max;
};

// The literal truncated double sum
//   -4 pi^2 r sum_{c = 0 (N), 0 < c <= c_max} c^{-2} sum_{l | c, l | r} mu(c/l) l,
// with the tail estimate 4 pi^2 r sigma_1(r) / (N^2 floor(c_max/N)).
inline EisensteinPartialSum eisenstein_numeric(long long N, long long r, long long c_max,
                                               unsigned threads = 0) {
    arith::require_positive(N, "eisenstein_numeric level");
    arith::require_positive(r, "eisenstein_numeric index");
    if (c_max < N)
        throw std::domain_error("eisenstein_numeric: empty sum, c_max is below the level");
    const long long K = c_max / N;
    auto sums = parallel::chunked_sum(1, K + 1, 1, threads, [&](long long k, detail::Kahan* acc) {
        const long long c = N * k;
        double inner = 0.0;
        for (long long l : arith::divisors(std::gcd(c, r)))
            inner += static_cast<double>(arith::mobius(c / l)) * static_cast<double>(l);
        acc[0].add(inner / (static_cast<double>(c) * static_cast<double>(c)));
    });
    const double pi2 = detail::pi * detail::pi;
    double value = -4.0 * pi2 * static_cast<double>(r) * sums[0];
    double tail = 4.0 * pi2 * static_cast<double>(r) * static_cast<double>(arith::sigma1(r))
                / (static_cast<double>(N) * static_cast<double>(N) * static_cast<double>(K));
    return {value, tail, c_max};
}

struct PoincareCoefficient {
    long long level;
    long long rp;     // the nonzero parameter r'
    long long r;      // the positive index
    double value;
    long long c_max;
    double tail_bound;
};

namespace detail_tail {

// Dropped-tail overestimate for the Poincare sum: Weil bound on K, the
// ascending-series bound Bessel(x) <= (x/2) e^{x^2/4}, and
// sum_{k>K} d(k) k^{-3/2} <= (3 ln K + 9) / sqrt(K) by partial summation
// against D(t) <= t (ln t + 1).
inline double poincare_tail(long long N, long long rp, long long r, long long c_max) {
    const long long K = c_max / N;
    const double g = static_cast<double>(std::gcd(r, std::llabs(rp)));
    const double x0 = 4.0 * detail::pi * std::sqrt(static_cast<double>(r * std::llabs(rp)))
                    / static_cast<double>(c_max);
    const double bessel_slack = std::exp(x0 * x0 / 4.0);
    const double dsum_tail = (3.0 * std::log(static_cast<double>(K)) + 9.0)
                           / std::sqrt(static_cast<double>(K));
    return 4.0 * detail::pi * detail::pi * static_cast<double>(r) * std::sqrt(g) * bessel_slack
         * static_cast<double>(arith::divisor_count(N)) * std::pow(static_cast<double>(N), -1.5)
         * dsum_tail;
}

} // namespace detail_tail

// p_{r',N}(r) = -2 pi sqrt(r/|r'|) sum_{c = 0 (N), 0 < c <= c_max}
//               K(-r, r'; c)/c * B(4 pi sqrt(r |r'|)/c),
// with B = I1 for r' > 0 and B = J1 for r' < 0 (|r'| under all radicals).
inline PoincareCoefficient poincare_coeff(long long N, long long rp, long long r,
                                          long long c_max, unsigned threads = 0,
                                          const special::SeriesEvalPolicy& policy = {}) {
    arith::require_positive(N, "poincare_coeff level");
    arith::require_positive(r, "poincare_coeff index");
    if (rp == 0) throw std::domain_error("poincare_coeff: parameter r' must be nonzero");
    if (c_max < N)
        throw std::domain_error("poincare_coeff: empty sum, c_max is below the level");
    const long long K = c_max / N;
    const long long rabs = std::llabs(rp);
    const double arg_num = 4.0 * detail::pi * std::sqrt(static_cast<double>(r * rabs));
    auto sums = parallel::chunked_sum(1, K + 1, 1, threads, [&](long long k, detail::Kahan* acc) {
        const long long c = N * k;
        arith::KloostermanEvaluator ev(c);
        const double kv = ev.eval(-r, rp);
        if (kv == 0.0) return;
        const double x = arg_num / static_cast<double>(c);
        const double bess = rp > 0 ? special::bessel_i1(x, policy) : special::bessel_j1(x, policy);
        acc[0].add(kv / static_cast<double>(c) * bess);
    });
    const double pref = -2.0 * detail::pi
                      * std::sqrt(static_cast<double>(r) / static_cast<double>(rabs));
    return {N, rp, r, pref * sums[0], c_max, detail_tail::poincare_tail(N, rp, r, c_max)};
}

// Assembled two-variable expansion over the box: the j = 0 row is the exact
// Eisenstein data (constant term 1), the mixed entries are Poincare
// coefficients, and pure-q rows vanish. One Kloosterman evaluator per
// modulus serves every entry, and the c-sweep reduces deterministically.
inline BiSeries<double> kernel_biseries(long long N, long A, long B, long long c_max,
                                        unsigned threads = 0,
                                        const special::SeriesEvalPolicy& policy = {}) {
    if (A < 1 || B < 1)
        throw std::domain_error("kernel_biseries: box bounds must be >= 1");
    if (c_max < N)
        throw std::domain_error("kernel_biseries: empty sum, c_max is below the level");
    hauptmodul::recipe_for(N); // supported-level gate

    const long long K = c_max / N;
    const std::size_t dim = static_cast<std::size_t>(A) * static_cast<std::size_t>(B);
    auto sums = parallel::chunked_sum(1, K + 1, dim, threads, [&](long long k, detail::Kahan* acc) {
        const long long c = N * k;
        arith::KloostermanEvaluator ev(c);
        for (long r = 1; r <= A; ++r) {
            for (long rp = 1; rp <= B; ++rp) {
                const double kv = ev.eval(-r, rp);
                if (kv == 0.0) continue;
                const double x = 4.0 * detail::pi
                               * std::sqrt(static_cast<double>(r) * static_cast<double>(rp))
                               / static_cast<double>(c);
                acc[(r - 1) * B + (rp - 1)].add(kv / static_cast<double>(c)
                                                * special::bessel_i1(x, policy));
            }
        }
    });

    BiSeries<double> out(A, B);
    out.set(0, 0, 1.0);
    for (long r = 1; r <= A; ++r)
        out.set(r, 0, to_double(eisenstein_exact(N, r)));
    for (long r = 1; r <= A; ++r)
        for (long rp = 1; rp <= B; ++rp) {
            double pref = -2.0 * detail::pi
                        * std::sqrt(static_cast<double>(r) / static_cast<double>(rp));
            out.set(r, rp, pref * sums[static_cast<std::size_t>((r - 1) * B + (rp - 1))]);
        }
    return out;
}

} // namespace gamma0::kernels

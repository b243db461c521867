#pragma once

// Exact two-variable verification of the Hauptmodul product identity
//   J_N(p) - J_N(q) = (p^{-1} - q^{-1}) prod_{r,s >= 1} (1 - p^r q^s)^{E_N(r,s)}
// over a finite coefficient box, entirely in integer arithmetic.
//
// Exponents. The naive reading E = sum_{d | (r,s,N)} a_N(rs/d^2) makes the
// identity FAIL for every supported level N > 1 once gcd(r,s,N) > 1 (first
// break: N=2 at (r,s)=(2,2)). The identity holds with the replicate-corrected
// exponents
//   E_N(r,s) = sum_{m | gcd(r,s)} (1/m) sum_{i | m} mu(m/i) a_{N/gcd(N,i)}(rs/m^2),
// where a_L are the coefficients of the level-L Hauptmodul; each inner sum is
// divisible by m (asserted, not assumed). At gcd(r,s) = 1 both readings agree
// (E = a_N(rs)). For N = 1 this is the classical c(rs) exponent. The naive
// sum is kept alongside as naive_exponent for comparison.
//
// Truncation correctness. After the (p^{-1} - q^{-1}) prefactor, the factor
// (1 - p^r q^s)^E first touches p-degree r - 1 and q-degree s - 1, so factors
// with r > A+1 or s > B+1 cannot reach the box -1 <= i <= A, -1 <= j <= B;
// enumerating r <= A+1, s <= B+1 is sufficient, and enlarging the box never
// changes coefficients inside a smaller one.

#include "biseries.hpp"
#include "hauptmodul.hpp"
#include "rational.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gamma0::borcherds {

using qseries::BiSeries;
using qseries::LaurentSeries;

struct ExponentTable {
    long long level;
    long rmax, smax;                         // table covers 1 <= r <= rmax, 1 <= s <= smax
    std::vector<std::vector<Integer>> entries; // entries[r-1][s-1]
    std::string source;                      // "exact-hauptmodul" or "corrupted"

    const Integer& at(long r, long s) const {
        if (r < 1 || r > rmax || s < 1 || s > smax)
            throw std::out_of_range("ExponentTable: index outside table");
        return entries[static_cast<size_t>(r - 1)][static_cast<size_t>(s - 1)];
    }
};

namespace detail_exp {

// Hauptmodul coefficient tables for every level N/g, g | N, to exponent cap.
inline std::map<long long, LaurentSeries> replicate_levels(long long N, long cap) {
    std::map<long long, LaurentSeries> J;
    for (long long g : arith::divisors(N)) {
        long long L = N / g;
        J.emplace(L, hauptmodul::hauptmodul(L, cap + 1));
    }
    return J;
}

inline Integer coeff(const LaurentSeries& J, long long n) {
    Rational c = J.coefficient(static_cast<long>(n));
    if (!is_integer(c)) throw std::logic_error("exponent_table: non-integer Hauptmodul coefficient");
    return numerator(c);
}

} // namespace detail_exp

// Single replicate-corrected exponent, given the precomputed level tables.
inline Integer corrected_exponent(long long N, long long r, long long s,
                                  const std::map<long long, LaurentSeries>& J) {
    Integer total = 0;
    long long g = std::gcd(r, s);
    for (long long m : arith::divisors(g)) {
        Integer inner = 0;
        for (long long i : arith::divisors(m)) {
            int mu = arith::mobius(m / i);
            if (!mu) continue;
            long long L = N / std::gcd(N, i);
            inner += Integer(mu) * detail_exp::coeff(J.at(L), r * s / (m * m));
        }
        if (inner % m != 0)
            throw std::logic_error("exponent_table: inner sum not divisible by m; "
                                   "replicate structure violated");
        total += inner / m;
    }
    return total;
}

// The uncorrected sum sum_{d | gcd(r,s,N)} a_N(rs/d^2). Provided for
// comparison only: feeding these to the product breaks the identity at the
// first (r,s) with gcd(r,s,N) > 1.
inline Integer naive_exponent(long long N, long long r, long long s) {
    long long g = std::gcd(std::gcd(r, s), N);
    long long cap = r * s;
    auto J = hauptmodul::hauptmodul(N, static_cast<long>(cap) + 1);
    Integer total = 0;
    for (long long d : arith::divisors(g))
        total += detail_exp::coeff(J, r * s / (d * d));
    return total;
}

inline ExponentTable exponent_table(long long N, long A, long B) {
    if (A < 0 || B < 0) throw std::domain_error("exponent_table: box bounds must be >= 0");
    const long rmax = A + 1, smax = B + 1;
    const long cap = rmax * smax;
    auto J = detail_exp::replicate_levels(N, cap);
    ExponentTable t{N, rmax, smax, {}, "exact-hauptmodul"};
    t.entries.assign(static_cast<size_t>(rmax),
                     std::vector<Integer>(static_cast<size_t>(smax), Integer(0)));
    for (long r = 1; r <= rmax; ++r)
        for (long s = 1; s <= smax; ++s)
            t.entries[static_cast<size_t>(r - 1)][static_cast<size_t>(s - 1)] =
                corrected_exponent(N, r, s, J);
    return t;
}

namespace detail_exp {

// (1 - p^r q^s)^E truncated to the working box, via the generalized binomial
// series: term k is C(E,k) (-1)^k p^{rk} q^{sk}, and C(E,k) stays integral
// through the stepwise recurrence.
inline BiSeries<Rational> factor_power(long r, long s, const Integer& E, long WA, long WB) {
    BiSeries<Rational> f(WA, WB);
    Integer binom = 1;
    long k = 0;
    f.set(0, 0, Rational(1));
    while ((k + 1) * r <= WA && (k + 1) * s <= WB) {
        ++k;
        Integer num = binom * (E - (k - 1));
        if (num % k != 0) throw std::logic_error("factor_power: binomial recurrence not integral");
        binom = num / k;
        Rational coeff ((k % 2) ? -binom : binom);
        f.set(k * r, k * s, std::move(coeff));
    }
    return f;
}

} // namespace detail_exp

// (p^{-1} - q^{-1}) * prod_{r <= A+1, s <= B+1} (1 - p^r q^s)^{E_N(r,s)},
// exact over the box (A, B). Factor polynomials are independent and may be
// built concurrently; the product itself is folded in lexicographic (r, s)
// order (exact arithmetic, so ordering is about reproducibility of the
// computation shape, not of values).
inline BiSeries<Rational> product_rhs(long long N, long A, long B,
                                      const ExponentTable& table, unsigned threads = 0) {
    if (table.rmax < A + 1 || table.smax < B + 1)
        throw std::domain_error("product_rhs: exponent table smaller than the factor bound");
    const long WA = A + 1, WB = B + 1;

    struct FactorJob { long r, s; };
    std::vector<FactorJob> jobs;
    for (long r = 1; r <= WA; ++r)
        for (long s = 1; s <= WB; ++s)
            if (table.at(r, s) != 0) jobs.push_back({r, s});

    std::vector<BiSeries<Rational>> polys(jobs.size(), BiSeries<Rational>(WA, WB));
    unsigned T = threads ? threads : 1;
    if (T <= 1 || jobs.size() < 2) {
        for (size_t i = 0; i < jobs.size(); ++i)
            polys[i] = detail_exp::factor_power(jobs[i].r, jobs[i].s,
                                                table.at(jobs[i].r, jobs[i].s), WA, WB);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                polys[i] = detail_exp::factor_power(jobs[i].r, jobs[i].s,
                                                    table.at(jobs[i].r, jobs[i].s), WA, WB);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<size_t>(T, jobs.size()); ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    BiSeries<Rational> acc = qseries::bi_one<Rational>(WA, WB);
    for (const auto& poly : polys) acc = bi_mul(acc, poly);

    BiSeries<Rational> pref(BiSeries<Rational>::trust_unbounded,
                            BiSeries<Rational>::trust_unbounded);
    pref.set(-1, 0, Rational(1));
    pref.set(0, -1, Rational(-1));
    return bi_mul(pref, acc);
}

inline BiSeries<Rational> product_rhs(long long N, long A, long B, unsigned threads = 0) {
    return product_rhs(N, A, B, exponent_table(N, A, B), threads);
}

// J_N(p) - J_N(q) over the box: row j=0 carries the p-expansion, column i=0
// the negated q-expansion, every mixed entry is zero.
inline BiSeries<Rational> lhs_difference(long long N, long A, long B) {
    if (A < 0 || B < 0) throw std::domain_error("lhs_difference: box bounds must be >= 0");
    long P = std::max(A, B) + 1;
    LaurentSeries J = hauptmodul::hauptmodul(N, P);
    auto diff = bi_sub(qseries::from_series_p(J), qseries::from_series_q(J));
    return bi_truncate(diff, A, B);
}

struct Mismatch {
    long i, j;
    Rational lhs, rhs;
};

struct VerificationReport {
    long long level;
    long box_a, box_b;
    long factor_rmax, factor_smax; // truncation parameters actually used
    bool pass;
    long long checked;             // monomials compared
    std::vector<Mismatch> mismatches;
    Rational max_abs_discrepancy;
    double elapsed_ms;             // 0 unless timing was requested
    std::string exponent_source;
};

struct VerifyOptions {
    unsigned threads = 0;
    bool timing = false;
    // Deliberately corrupts E(1,1) by +1 before expanding, to demonstrate
    // that the comparison actually bites. Reports exponent_source
    // "corrupted" and must fail.
    bool corrupt_exponent = false;
};

inline VerificationReport verify_identity(long long N, long A, long B,
                                          const VerifyOptions& opts = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    ExponentTable table = exponent_table(N, A, B);
    if (opts.corrupt_exponent) {
        table.entries[0][0] += 1;
        table.source = "corrupted";
    }
    auto rhs = product_rhs(N, A, B, table, opts.threads);
    auto lhs = lhs_difference(N, A, B);

    VerificationReport rep{N, A, B, table.rmax, table.smax, true, 0, {}, Rational(0), 0.0,
                           table.source};
    for (long i = -1; i <= A; ++i) {
        for (long j = -1; j <= B; ++j) {
            ++rep.checked;
            Rational l = lhs.get(i, j), r = rhs.get(i, j);
            if (l == r) continue;
            rep.pass = false;
            rep.mismatches.push_back({i, j, l, r});
            Rational d = abs(l - r);
            if (d > rep.max_abs_discrepancy) rep.max_abs_discrepancy = d;
        }
    }
    if (opts.timing) {
        const auto t1 = std::chrono::steady_clock::now();
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
    return rep;
}

} // namespace gamma0::borcherds

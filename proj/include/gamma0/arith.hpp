#pragma once

// Number-theoretic primitives: multiplicative functions, batch modular
// inverses, Kloosterman sums K(a,b;c) and the identities they satisfy
// (Selberg, Weil), and the divisor Dirichlet partial sums.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gamma0::detail {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Compensated (Kahan) accumulator. Used everywhere a float sum must be
// bit-reproducible for a fixed order of terms.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

} // namespace gamma0::detail

namespace gamma0::arith {

inline void require_positive(long long n, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + ": argument must be >= 1");
}

// Prime factorization by trial division; returns (p, exponent) pairs, p ascending.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    require_positive(n, "factorize");
    std::vector<std::pair<long long, int>> f;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

inline int mobius(long long n) {
    require_positive(n, "mobius");
    int m = 1;
    for (auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        m = -m;
    }
    return m;
}

// All positive divisors, ascending.
inline std::vector<long long> divisors(long long n) {
    require_positive(n, "divisors");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline long long divisor_count(long long n) {
    require_positive(n, "divisor_count");
    long long c = 1;
    for (auto& [p, e] : factorize(n)) c *= e + 1;
    return c;
}

inline long long sigma1(long long n) {
    require_positive(n, "sigma1");
    long long s = 1;
    for (auto& [p, e] : factorize(n)) {
        long long pk = 1, geo = 1;
        for (int i = 0; i < e; ++i) { pk *= p; geo += pk; }
        s *= geo;
    }
    return s;
}

inline long long sigma3(long long n) {
    require_positive(n, "sigma3");
    long long s = 0;
    for (long long d : divisors(n)) s += d * d * d;
    return s;
}

inline long long euler_phi(long long n) {
    require_positive(n, "euler_phi");
    long long r = n;
    for (auto& [p, e] : factorize(n)) r -= r / p;
    return r;
}

// N * prod_{p|N} (1 + 1/p). The source text calls this the Euler function;
// it is the Dedekind psi function and is implemented under that name.
inline long long dedekind_psi(long long n) {
    require_positive(n, "dedekind_psi");
    long long r = n;
    for (auto& [p, e] : factorize(n)) r += r / p;
    return r;
}

// Extended-gcd inverse of a mod m, for gcd(a,m)=1, result in [0,m).
inline long long inverse_mod(long long a, long long m) {
    long long r0 = m, r1 = ((a % m) + m) % m;
    long long t0 = 0, t1 = 1;
    while (r1) {
        long long q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        t0 -= q * t1; std::swap(t0, t1);
    }
    if (r0 != 1) throw std::domain_error("inverse_mod: arguments not coprime");
    return ((t0 % m) + m) % m;
}

// Inverses of all units mod c in one pass: entry m holds m^{-1} mod c when
// gcd(m,c)=1, otherwise 0. Linear-time batch inversion: one prefix-product
// sweep over the units, a single extended gcd, and a backward sweep.
// (The textbook per-element recurrence inv[i] = -(c/i)*inv[c%i] needs c prime
// and is wrong for composite c, which is the common case here.)
inline std::vector<uint32_t> inverse_table(long long c) {
    require_positive(c, "inverse_table");
    std::vector<uint32_t> inv(static_cast<size_t>(c), 0);
    if (c == 1) return inv; // no residues in [1, c)
    std::vector<char> coprime(static_cast<size_t>(c), 1);
    coprime[0] = 0;
    for (long long p : prime_divisors(c))
        for (long long k = p; k < c; k += p) coprime[static_cast<size_t>(k)] = 0;

    std::vector<uint32_t> units;
    units.reserve(static_cast<size_t>(c));
    for (long long m = 1; m < c; ++m)
        if (coprime[static_cast<size_t>(m)]) units.push_back(static_cast<uint32_t>(m));
    if (units.empty()) return inv;

    std::vector<uint64_t> prefix(units.size());
    uint64_t acc = 1;
    for (size_t i = 0; i < units.size(); ++i) {
        acc = acc * units[i] % static_cast<uint64_t>(c);
        prefix[i] = acc;
    }
    uint64_t run = static_cast<uint64_t>(inverse_mod(static_cast<long long>(acc), c));
    for (size_t i = units.size(); i-- > 0;) {
        uint64_t before = i ? prefix[i - 1] : 1;
        inv[units[i]] = static_cast<uint32_t>(run * before % static_cast<uint64_t>(c));
        run = run * units[i] % static_cast<uint64_t>(c);
    }
    return inv;
}

// Evaluates K(a,b;c) = sum over units m of e^{2 pi i (a m + b m*)/c} for one
// fixed modulus c, sharing the inverse table and a cosine table across many
// (a,b) pairs. The sum is real (pair m with m*), so only cosines are needed.
// Terms are added in ascending m with compensated summation so results are
// bit-identical for a fixed c regardless of caller threading.
class KloostermanEvaluator {
public:
    explicit KloostermanEvaluator(long long c)
        : c_(c), inv_(inverse_table(c)), cosine_(static_cast<size_t>(c)) {
        require_positive(c, "KloostermanEvaluator");
        const double w = 2.0 * detail::pi / static_cast<double>(c);
        for (long long k = 0; k < c; ++k)
            cosine_[static_cast<size_t>(k)] = std::cos(w * static_cast<double>(k));
        term_count_ = 0;
        for (long long m = 1; m < c; ++m)
            if (inv_[static_cast<size_t>(m)]) ++term_count_;
        if (c == 1) term_count_ = 1; // single residue class mod 1
    }

    long long modulus() const { return c_; }
    long long term_count() const { return term_count_; }

    double eval(long long a, long long b) const {
        if (c_ == 1) return 1.0;
        const uint64_t c = static_cast<uint64_t>(c_);
        const uint64_t ar = static_cast<uint64_t>(((a % c_) + c_) % c_);
        const uint64_t br = static_cast<uint64_t>(((b % c_) + c_) % c_);
        detail::Kahan acc;
        for (uint64_t m = 1; m < c; ++m) {
            uint32_t mi = inv_[m];
            if (!mi) continue;
            acc.add(cosine_[(ar * m + br * mi) % c]);
        }
        return acc.value();
    }

    // Imaginary part of the defining sum, summed explicitly. Zero in exact
    // arithmetic; exposed so tests can bound the floating residue.
    double eval_imag(long long a, long long b) const {
        if (c_ == 1) return 0.0;
        const uint64_t c = static_cast<uint64_t>(c_);
        const uint64_t ar = static_cast<uint64_t>(((a % c_) + c_) % c_);
        const uint64_t br = static_cast<uint64_t>(((b % c_) + c_) % c_);
        const double w = 2.0 * detail::pi / static_cast<double>(c_);
        detail::Kahan acc;
        for (uint64_t m = 1; m < c; ++m) {
            uint32_t mi = inv_[m];
            if (!mi) continue;
            acc.add(std::sin(w * static_cast<double>((ar * m + br * mi) % c)));
        }
        return acc.value();
    }

private:
    long long c_;
    std::vector<uint32_t> inv_;
    std::vector<double> cosine_;
    long long term_count_;
};

inline double kloosterman(long long a, long long b, long long c) {
    return KloostermanEvaluator(c).eval(a, b);
}

// Independent cross-check path: no shared tables, per-term inverse by
// extended gcd, long-double cosine of the reduced rational angle.
inline double kloosterman_brute(long long a, long long b, long long c) {
    require_positive(c, "kloosterman_brute");
    if (c == 1) return 1.0;
    const long double two_pi = 6.283185307179586476925286766559L;
    long double acc = 0.0L;
    const long long ar = ((a % c) + c) % c, br = ((b % c) + c) % c;
    for (long long m = 1; m < c; ++m) {
        if (std::gcd(m, c) != 1) continue;
        long long mi = inverse_mod(m, c);
        long long k = (ar % c * (m % c) + br % c * mi) % c;
        acc += cosl(two_pi * static_cast<long double>(k) / static_cast<long double>(c));
    }
    return static_cast<double>(acc);
}

// Multiplicative decomposition: for c = u*v with gcd(u,v)=1,
// K(a,b;uv) = K(a v̄, b v̄; u) * K(a ū, b ū; v). Optional fast path; the
// direct sum stays the reference.
inline double kloosterman_crt(long long a, long long b, long long c) {
    require_positive(c, "kloosterman_crt");
    double prod = 1.0;
    for (auto& [p, e] : factorize(c)) {
        long long pe = 1;
        for (int i = 0; i < e; ++i) pe *= p;
        long long m = c / pe;
        long long mbar = inverse_mod(m, pe); // m is coprime to pe by construction
        long long aa = ((a % pe) * (mbar % pe)) % pe;
        long long bb = ((b % pe) * (mbar % pe)) % pe;
        prod *= kloosterman(aa, bb, pe);
    }
    return prod;
}

// Both sides of the Selberg identity
//   K(r, r'; c) = sum_{m | (r, r', c)} m * K(r r'/m^2, 1; c/m),
// evaluated independently.
inline std::pair<double, double> selberg_sides(long long r, long long rp, long long c) {
    require_positive(c, "selberg_sides");
    if (r == 0 || rp == 0) throw std::domain_error("selberg_sides: r and r' must be nonzero");
    double lhs = kloosterman(r, rp, c);
    long long g = std::gcd(std::gcd(std::abs(r), std::abs(rp)), c);
    double rhs = 0.0;
    for (long long m : divisors(g))
        rhs += static_cast<double>(m) * kloosterman(r * rp / (m * m), 1, c / m);
    return {lhs, rhs};
}

// d(c) * sqrt(gcd(a,b,c)) * sqrt(c) - |K(a,b;c)|; nonnegative by the Weil
// bound. The evaluator overload lets grid sweeps reuse one table per modulus.
inline double weil_margin(const KloostermanEvaluator& ev, long long a, long long b) {
    const long long c = ev.modulus();
    if (a == 0 && b == 0) throw std::domain_error("weil_margin: (a,b) = (0,0) excluded");
    long long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), c);
    double bound = static_cast<double>(divisor_count(c))
                 * std::sqrt(static_cast<double>(g))
                 * std::sqrt(static_cast<double>(c));
    return bound - std::abs(ev.eval(a, b));
}

inline double weil_margin(long long a, long long b, long long c) {
    require_positive(c, "weil_margin");
    return weil_margin(KloostermanEvaluator(c), a, b);
}

struct DirichletPartial {
    double divisor_side;  // sum_{n<=X} d(n)/n^s
    double zeta_sq_side;  // (sum_{n<=X} 1/n^s)^2
    double tail_bound;    // 2*zeta(s)*X^{1-s}/(s-1)
};

// Partial sums of the divisor Dirichlet series against the square of the
// zeta partial sum, with the analytic tail estimate supplied alongside.
inline DirichletPartial dirichlet_d_partial(double s, long long X) {
    if (!(s > 1.0)) throw std::domain_error("dirichlet_d_partial: requires s > 1");
    require_positive(X, "dirichlet_d_partial");
    std::vector<uint32_t> d(static_cast<size_t>(X) + 1, 0);
    for (long long a = 1; a <= X; ++a)
        for (long long n = a; n <= X; n += a) ++d[static_cast<size_t>(n)];
    detail::Kahan dsum, zsum;
    for (long long n = 1; n <= X; ++n) {
        double ns = std::pow(static_cast<double>(n), -s);
        dsum.add(static_cast<double>(d[static_cast<size_t>(n)]) * ns);
        zsum.add(ns);
    }
    // zeta(s) for the bound: direct series plus integral tail remainder,
    // accurate far beyond the bound's own fidelity.
    detail::Kahan zeta;
    const long long M = 200000;
    for (long long n = 1; n <= M; ++n) zeta.add(std::pow(static_cast<double>(n), -s));
    double zs = zeta.value() + std::pow(static_cast<double>(M), 1.0 - s) / (s - 1.0);
    double z = zsum.value();
    return {dsum.value(), z * z, 2.0 * zs * std::pow(static_cast<double>(X), 1.0 - s) / (s - 1.0)};
}

} // namespace gamma0::arith

#pragma once

// Exact truncated Laurent-series arithmetic over arbitrary-precision
// rationals, with eta products and the j-function built on top. A series
// carries a precision P: coefficients are trusted for exponents < P, and
// every operation propagates the minimum justified precision of its inputs.

#include "arith.hpp"
#include "rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gamma0::qseries {

class LaurentSeries {
public:
    LaurentSeries() : val_(0), prec_(0) {}

    LaurentSeries(long valuation, std::vector<Rational> coeffs, long precision)
        : val_(valuation), prec_(precision), c_(std::move(coeffs)) {
        normalize();
    }

    static LaurentSeries zero(long precision) {
        return LaurentSeries(precision, {}, precision);
    }

    static LaurentSeries one(long precision) {
        return monomial(0, 1, precision);
    }

    static LaurentSeries monomial(long exponent, Rational coeff, long precision) {
        return LaurentSeries(exponent, {std::move(coeff)}, precision);
    }

    // For the zero series valuation() == precision(): no trusted nonzero term.
    long valuation() const { return val_; }
    long precision() const { return prec_; }
    bool is_zero() const { return c_.empty(); }

    Rational coefficient(long e) const {
        if (e >= prec_)
            throw std::out_of_range("LaurentSeries: coefficient past precision (exponent " +
                                    std::to_string(e) + ", trusted below " +
                                    std::to_string(prec_) + ")");
        if (e < val_ || e >= val_ + static_cast<long>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(e - val_)];
    }

    const std::vector<Rational>& coefficients() const { return c_; }

    bool operator==(const LaurentSeries& o) const {
        return val_ == o.val_ && prec_ == o.prec_ && c_ == o.c_;
    }
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

private:
    // Canonical form: stored range is exactly [val, prec) with nonzero leading
    // entry, or empty with val == prec for the zero series.
    void normalize() {
        if (prec_ <= val_) { c_.clear(); val_ = prec_; return; }
        c_.resize(static_cast<size_t>(prec_ - val_), Rational(0));
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) { c_.clear(); val_ = prec_; return; }
        if (lead) {
            c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
            val_ += static_cast<long>(lead);
        }
    }

    long val_;
    long prec_;
    std::vector<Rational> c_;
};

inline LaurentSeries series_truncate(const LaurentSeries& f, long precision) {
    if (precision > f.precision())
        throw std::domain_error("series_truncate: cannot raise precision");
    std::vector<Rational> c;
    for (long e = f.valuation(); e < precision; ++e) c.push_back(f.coefficient(e));
    return LaurentSeries(f.valuation(), std::move(c), precision);
}

inline LaurentSeries series_add(const LaurentSeries& f, const LaurentSeries& g) {
    long prec = std::min(f.precision(), g.precision());
    long val = std::min(f.valuation(), g.valuation());
    if (val >= prec) return LaurentSeries::zero(prec);
    std::vector<Rational> c;
    c.reserve(static_cast<size_t>(prec - val));
    for (long e = val; e < prec; ++e) {
        Rational s(0);
        if (e < f.precision()) s += f.coefficient(e);
        if (e < g.precision()) s += g.coefficient(e);
        c.push_back(std::move(s));
    }
    return LaurentSeries(val, std::move(c), prec);
}

inline LaurentSeries series_scale(const LaurentSeries& f, const Rational& a) {
    std::vector<Rational> c;
    for (const auto& x : f.coefficients()) c.push_back(x * a);
    return LaurentSeries(f.valuation(), std::move(c), f.precision());
}

inline LaurentSeries series_neg(const LaurentSeries& f) { return series_scale(f, Rational(-1)); }

inline LaurentSeries series_sub(const LaurentSeries& f, const LaurentSeries& g) {
    return series_add(f, series_neg(g));
}

// Cauchy product truncated to the justified precision
// min(P_f + val_g, P_g + val_f).
inline LaurentSeries series_mul(const LaurentSeries& f, const LaurentSeries& g) {
    long prec = std::min(f.precision() + g.valuation(), g.precision() + f.valuation());
    if (f.is_zero() || g.is_zero()) return LaurentSeries::zero(prec);
    long val = f.valuation() + g.valuation();
    if (val >= prec) return LaurentSeries::zero(prec);
    std::vector<Rational> c(static_cast<size_t>(prec - val), Rational(0));
    const auto& fc = f.coefficients();
    const auto& gc = g.coefficients();
    for (size_t i = 0; i < fc.size(); ++i) {
        if (fc[i] == 0) continue;
        long ef = f.valuation() + static_cast<long>(i);
        long lim = prec - ef - g.valuation(); // g-exponents beyond this cannot land inside prec
        if (lim <= 0) continue;
        size_t jmax = std::min(gc.size(), static_cast<size_t>(lim));
        for (size_t j = 0; j < jmax; ++j) {
            if (gc[j] == 0) continue;
            c[static_cast<size_t>(ef + g.valuation() + static_cast<long>(j) - val)] += fc[i] * gc[j];
        }
    }
    return LaurentSeries(val, std::move(c), prec);
}

// g with f*g = 1 up to precision P_f - 2*val_f.
inline LaurentSeries series_inverse(const LaurentSeries& f) {
    if (f.is_zero())
        throw std::domain_error("series_inverse: zero leading coefficient");
    const long v = f.valuation();
    const long L = f.precision() - v; // stored length of the unit part
    const auto& fc = f.coefficients();
    std::vector<Rational> g(static_cast<size_t>(L), Rational(0));
    Rational lead_inv = Rational(1) / fc[0];
    g[0] = lead_inv;
    for (long n = 1; n < L; ++n) {
        Rational s(0);
        for (long k = 1; k <= n; ++k)
            s += fc[static_cast<size_t>(k)] * g[static_cast<size_t>(n - k)];
        g[static_cast<size_t>(n)] = -lead_inv * s;
    }
    return LaurentSeries(-v, std::move(g), f.precision() - 2 * v);
}

inline LaurentSeries series_pow(const LaurentSeries& f, long e) {
    if (e < 0) return series_pow(series_inverse(f), -e);
    LaurentSeries acc = LaurentSeries::one(f.precision());
    LaurentSeries base = f;
    while (e) {
        if (e & 1) acc = series_mul(acc, base);
        e >>= 1;
        if (e) base = series_mul(base, base);
    }
    return acc;
}

inline LaurentSeries series_derivative(const LaurentSeries& f) {
    std::vector<Rational> c;
    const auto& fc = f.coefficients();
    for (size_t i = 0; i < fc.size(); ++i)
        c.push_back(fc[i] * Rational(f.valuation() + static_cast<long>(i)));
    return LaurentSeries(f.valuation() - 1, std::move(c), f.precision() - 1);
}

inline LaurentSeries series_integrate(const LaurentSeries& f) {
    if (f.valuation() <= -1 && f.precision() > -1 && f.coefficient(-1) != 0)
        throw std::domain_error("series_integrate: q^{-1} term has no series antiderivative");
    std::vector<Rational> c;
    const auto& fc = f.coefficients();
    for (size_t i = 0; i < fc.size(); ++i) {
        long e = f.valuation() + static_cast<long>(i);
        c.push_back(e == -1 ? Rational(0) : fc[i] / Rational(e + 1));
    }
    return LaurentSeries(f.valuation() + 1, std::move(c), f.precision() + 1);
}

// log f = integral of f'/f, for f = 1 + (positive-order terms).
inline LaurentSeries series_log(const LaurentSeries& f) {
    if (f.is_zero() || f.valuation() != 0 || f.coefficient(0) != 1)
        throw std::domain_error("series_log: requires f = 1 + higher-order terms");
    return series_integrate(series_mul(series_derivative(f), series_inverse(f)));
}

// exp f for valuation(f) >= 1, by the recurrence k*g_k = sum_j j*f_j*g_{k-j}.
inline LaurentSeries series_exp(const LaurentSeries& f) {
    if (!f.is_zero() && f.valuation() < 1)
        throw std::domain_error("series_exp: requires valuation >= 1");
    const long P = f.precision();
    if (P < 1) return LaurentSeries::zero(P);
    std::vector<Rational> g(static_cast<size_t>(P), Rational(0));
    g[0] = 1;
    for (long k = 1; k < P; ++k) {
        Rational s(0);
        for (long j = 1; j <= k; ++j) {
            if (j >= f.precision()) break;
            Rational fj = f.coefficient(j);
            if (fj == 0) continue;
            s += Rational(j) * fj * g[static_cast<size_t>(k - j)];
        }
        g[static_cast<size_t>(k)] = s / Rational(k);
    }
    return LaurentSeries(0, std::move(g), P);
}

// prod_{n>=1} (1 - q^{dn}) to precision P, by the pentagonal number theorem.
inline LaurentSeries euler_product(long d, long P) {
    if (d < 1) throw std::domain_error("euler_product: d must be >= 1");
    if (P <= 0) return LaurentSeries::zero(P);
    std::vector<Rational> c(static_cast<size_t>(P), Rational(0));
    c[0] = 1;
    for (long k = 1;; ++k) {
        long e1 = d * (k * (3 * k - 1) / 2);
        long e2 = d * (k * (3 * k + 1) / 2);
        if (e1 >= P && e2 >= P) break;
        Rational s((k % 2) ? -1 : 1);
        if (e1 < P) c[static_cast<size_t>(e1)] += s;
        if (e2 < P) c[static_cast<size_t>(e2)] += s;
    }
    return LaurentSeries(0, std::move(c), P);
}

struct EtaQuotient {
    // factors (d, e_d) meaning eta(d z)^{e_d}
    std::vector<std::pair<long, long>> factors;

    long weight24() const {
        long s = 0;
        for (auto& [d, e] : factors) s += d * e;
        return s;
    }
};

// q^{sum d e_d / 24} * prod_d prod_{n>=1} (1 - q^{dn})^{e_d}, to precision P.
// Rejected unless sum d e_d is divisible by 24, so the result is an honest
// integer-power Laurent series.
inline LaurentSeries eta_expand(const EtaQuotient& eq, long P) {
    for (auto& [d, e] : eq.factors)
        if (d < 1) throw std::domain_error("eta_expand: factor periods must be >= 1");
    long s24 = eq.weight24();
    if (s24 % 24 != 0)
        throw std::domain_error("eta_expand: sum of d*e_d must be divisible by 24 "
                                "(got " + std::to_string(s24) + ")");
    long shift = s24 / 24;
    long L = P - shift;
    if (L <= 0) return LaurentSeries::zero(P);
    LaurentSeries r = LaurentSeries::one(L);
    for (auto& [d, e] : eq.factors)
        r = series_mul(r, series_pow(euler_product(d, L), e));
    std::vector<Rational> c(r.coefficients());
    return LaurentSeries(r.valuation() + shift, std::move(c), P);
}

inline LaurentSeries delta_series(long P) {
    return eta_expand(EtaQuotient{{{1, 24}}}, P);
}

inline LaurentSeries eisenstein_e4(long P) {
    if (P <= 0) return LaurentSeries::zero(P);
    std::vector<Rational> c(static_cast<size_t>(P), Rational(0));
    c[0] = 1;
    for (long n = 1; n < P; ++n) c[static_cast<size_t>(n)] = Rational(240) * arith::sigma3(n);
    return LaurentSeries(0, std::move(c), P);
}

// j = E4^3 / Delta = q^{-1} + 744 + 196884 q + ...
inline LaurentSeries j_function(long P) {
    if (P < 1) throw std::domain_error("j_function: precision must be >= 1");
    const long W = P + 2; // absorbs the two units lost inverting Delta (valuation 1)
    LaurentSeries e4 = eisenstein_e4(W);
    LaurentSeries num = series_mul(series_mul(e4, e4), e4);
    LaurentSeries j = series_mul(num, series_inverse(delta_series(W)));
    return series_truncate(j, P);
}

} // namespace gamma0::qseries

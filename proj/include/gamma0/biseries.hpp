#pragma once

// Sparse two-variable series with box truncation. Exponents run from -1
// upward in each variable; a box (A, B) means coefficients are stored and
// trusted for -1 <= i <= A, -1 <= j <= B. Multiplication propagates the
// justified box via the factor valuations, mirroring the one-variable rule.

#include "qseries.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace gamma0::qseries {

template <class Coeff>
class BiSeries {
public:
    // Box bound for series exact in a variable (polynomials, single-variable
    // embeddings). Large enough to dominate every honest bound, small enough
    // that sums of two bounds cannot overflow.
    static constexpr long trust_unbounded = 1L << 40;

    // A bound of -2 denotes an empty trust region (no coefficient claimed);
    // anything below that is a caller error.
    BiSeries(long A, long B) : A_(A), B_(B) {
        if (A < -2 || B < -2)
            throw std::domain_error("BiSeries: box bounds must be >= -2");
    }

    long box_a() const { return A_; }
    long box_b() const { return B_; }

    bool inside(long i, long j) const {
        return i >= -1 && j >= -1 && i <= A_ && j <= B_;
    }

    Coeff get(long i, long j) const {
        require_inside(i, j);
        auto it = c_.find({i, j});
        return it == c_.end() ? Coeff(0) : it->second;
    }

    void set(long i, long j, Coeff v) {
        require_inside(i, j);
        if (v == Coeff(0)) c_.erase({i, j});
        else c_[{i, j}] = std::move(v);
    }

    void add_to(long i, long j, const Coeff& v) {
        require_inside(i, j);
        auto it = c_.find({i, j});
        if (it == c_.end()) {
            if (v != Coeff(0)) c_[{i, j}] = v;
            return;
        }
        it->second += v;
        if (it->second == Coeff(0)) c_.erase(it);
    }

    bool is_zero() const { return c_.empty(); }

    // Lowest p-exponent (and q-exponent) carrying a stored entry; the
    // unbounded sentinel for the zero series.
    long val_p() const {
        long v = trust_unbounded;
        for (auto& [ij, x] : c_) v = std::min(v, ij.first);
        return v;
    }
    long val_q() const {
        long v = trust_unbounded;
        for (auto& [ij, x] : c_) v = std::min(v, ij.second);
        return v;
    }

    // Deterministic (lexicographic) iteration order.
    const std::map<std::pair<long, long>, Coeff>& entries() const { return c_; }

    bool operator==(const BiSeries& o) const {
        return A_ == o.A_ && B_ == o.B_ && c_ == o.c_;
    }
    bool operator!=(const BiSeries& o) const { return !(*this == o); }

private:
    void require_inside(long i, long j) const {
        if (!inside(i, j))
            throw std::out_of_range("BiSeries: exponent (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside the trusted box");
    }

    long A_, B_;
    std::map<std::pair<long, long>, Coeff> c_;
};

template <class Coeff>
BiSeries<Coeff> bi_one(long A, long B) {
    BiSeries<Coeff> r(A, B);
    r.set(0, 0, Coeff(1));
    return r;
}

template <class Coeff>
BiSeries<Coeff> bi_add(const BiSeries<Coeff>& f, const BiSeries<Coeff>& g) {
    BiSeries<Coeff> r(std::min(f.box_a(), g.box_a()), std::min(f.box_b(), g.box_b()));
    for (auto& [ij, x] : f.entries())
        if (r.inside(ij.first, ij.second)) r.add_to(ij.first, ij.second, x);
    for (auto& [ij, x] : g.entries())
        if (r.inside(ij.first, ij.second)) r.add_to(ij.first, ij.second, x);
    return r;
}

template <class Coeff>
BiSeries<Coeff> bi_scale(const BiSeries<Coeff>& f, const Coeff& a) {
    BiSeries<Coeff> r(f.box_a(), f.box_b());
    for (auto& [ij, x] : f.entries()) r.set(ij.first, ij.second, x * a);
    return r;
}

template <class Coeff>
BiSeries<Coeff> bi_neg(const BiSeries<Coeff>& f) {
    return bi_scale(f, Coeff(-1));
}

template <class Coeff>
BiSeries<Coeff> bi_sub(const BiSeries<Coeff>& f, const BiSeries<Coeff>& g) {
    return bi_add(f, bi_neg(g));
}

// Product with the justified box min(A_f + valp_g, A_g + valp_f) (and the
// analogue in q): a coefficient is kept only where every contribution lies
// inside both input boxes. Products falling below exponent -1 in either
// variable are unrepresentable and rejected rather than dropped.
template <class Coeff>
BiSeries<Coeff> bi_mul(const BiSeries<Coeff>& f, const BiSeries<Coeff>& g) {
    const long cap = BiSeries<Coeff>::trust_unbounded;
    long A = std::min({f.box_a() + g.val_p(), g.box_a() + f.val_p(), cap});
    long B = std::min({f.box_b() + g.val_q(), g.box_b() + f.val_q(), cap});
    BiSeries<Coeff> r(std::max(A, -2L), std::max(B, -2L));
    if (A < -1 || B < -1) return r; // empty trust region
    for (auto& [ij1, x1] : f.entries()) {
        for (auto& [ij2, x2] : g.entries()) {
            long i = ij1.first + ij2.first;
            long j = ij1.second + ij2.second;
            if (i < -1 || j < -1)
                throw std::domain_error("bi_mul: product exponent below -1 is unrepresentable");
            if (i > A || j > B) continue;
            r.add_to(i, j, x1 * x2);
        }
    }
    return r;
}

template <class Coeff>
BiSeries<Coeff> bi_truncate(const BiSeries<Coeff>& f, long A, long B) {
    if (A > f.box_a() || B > f.box_b())
        throw std::domain_error("bi_truncate: cannot enlarge the trusted box");
    BiSeries<Coeff> r(A, B);
    for (auto& [ij, x] : f.entries())
        if (r.inside(ij.first, ij.second)) r.set(ij.first, ij.second, x);
    return r;
}

// Embeddings of a one-variable series: f(p) is exact in q (every q-exponent
// other than zero carries an exact zero), and symmetrically for f(q).
inline BiSeries<Rational> from_series_p(const LaurentSeries& f) {
    BiSeries<Rational> r(f.precision() - 1, BiSeries<Rational>::trust_unbounded);
    if (f.valuation() < -1 && !f.is_zero())
        throw std::domain_error("from_series_p: valuation below -1 unsupported");
    for (long e = std::max(f.valuation(), -1L); e < f.precision(); ++e) {
        Rational c = f.coefficient(e);
        if (c != 0) r.set(e, 0, std::move(c));
    }
    return r;
}

inline BiSeries<Rational> from_series_q(const LaurentSeries& f) {
    BiSeries<Rational> r(BiSeries<Rational>::trust_unbounded, f.precision() - 1);
    if (f.valuation() < -1 && !f.is_zero())
        throw std::domain_error("from_series_q: valuation below -1 unsupported");
    for (long e = std::max(f.valuation(), -1L); e < f.precision(); ++e) {
        Rational c = f.coefficient(e);
        if (c != 0) r.set(0, e, std::move(c));
    }
    return r;
}

} // namespace gamma0::qseries

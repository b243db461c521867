#pragma once

// Normalized Hauptmoduls of genus-zero Gamma_0(N): exact q-expansions
// q^{-1} + 0 + sum_{r>=1} a_N(r) q^r, built from eta quotients (and from
// E4^3/Delta at level one).

#include "qseries.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gamma0::hauptmodul {

using qseries::EtaQuotient;
using qseries::LaurentSeries;

inline const std::set<long>& genus_zero_levels() {
    static const std::set<long> levels = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25};
    return levels;
}

struct HauptmodulRecipe {
    long level;
    std::optional<EtaQuotient> quotient; // empty at level one, where J = j - 744
    long shift;                          // constant added to zero the q^0 term
};

inline const std::vector<HauptmodulRecipe>& supported_recipes() {
    static const std::vector<HauptmodulRecipe> recipes = {
        {1, std::nullopt, -744},
        {2, EtaQuotient{{{1, 24}, {2, -24}}}, 24},
        {3, EtaQuotient{{{1, 12}, {3, -12}}}, 12},
        {4, EtaQuotient{{{1, 8}, {4, -8}}}, 8},
        {5, EtaQuotient{{{1, 6}, {5, -6}}}, 6},
        {7, EtaQuotient{{{1, 4}, {7, -4}}}, 4},
        {9, EtaQuotient{{{1, 3}, {9, -3}}}, 3},
        {13, EtaQuotient{{{1, 2}, {13, -2}}}, 2},
        {25, EtaQuotient{{{1, 1}, {25, -1}}}, 1},
    };
    return recipes;
}

inline std::set<long> supported_levels() {
    std::set<long> s;
    for (const auto& r : supported_recipes()) s.insert(r.level);
    return s;
}

inline const HauptmodulRecipe& recipe_for(long N) {
    for (const auto& r : supported_recipes())
        if (r.level == N) return r;
    std::string msg = "hauptmodul: no recipe for level " + std::to_string(N) + "; supported levels:";
    for (const auto& r : supported_recipes()) msg += " " + std::to_string(r.level);
    throw std::domain_error(msg);
}

// Exact q-expansion of J_{Gamma_0(N)} to precision P. The nominal shift in
// the recipe is cross-checked against the expansion itself: the shift must
// equal the negated constant term of the unshifted series, and the result
// must have valuation -1, leading coefficient 1, zero constant term, and
// integer coefficients. A wrong recipe fails loudly here.
inline LaurentSeries hauptmodul(long N, long P) {
    const HauptmodulRecipe& rec = recipe_for(N);
    if (P < 1)
        throw std::domain_error("hauptmodul: precision must be >= 1 to see the q^{-1} term");
    LaurentSeries raw = rec.quotient ? qseries::eta_expand(*rec.quotient, P)
                                     : qseries::j_function(P);
    if (raw.coefficient(0) != -rec.shift)
        throw std::logic_error("hauptmodul: recipe shift " + std::to_string(rec.shift) +
                               " does not negate the computed constant term at level " +
                               std::to_string(N));
    LaurentSeries J = series_add(raw, LaurentSeries::monomial(0, rec.shift, P));
    if (J.valuation() != -1 || J.coefficient(-1) != 1)
        throw std::logic_error("hauptmodul: expansion is not q^{-1} + O(q) at level " +
                               std::to_string(N));
    if (J.coefficient(0) != 0)
        throw std::logic_error("hauptmodul: nonzero constant term at level " + std::to_string(N));
    for (long e = -1; e < P; ++e)
        if (!is_integer(J.coefficient(e)))
            throw std::logic_error("hauptmodul: non-integer coefficient at level " +
                                   std::to_string(N) + ", exponent " + std::to_string(e));
    return J;
}

// a_N(r), the coefficient of q^r in the Hauptmodul; a_N(-1) = 1, a_N(0) = 0.
inline Rational hauptmodul_coefficient(long N, long r) {
    if (r < -1) return Rational(0);
    return hauptmodul(N, std::max(r + 1, 1L)).coefficient(r);
}

} // namespace gamma0::hauptmodul

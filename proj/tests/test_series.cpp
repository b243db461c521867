#include <catch2/catch_amalgamated.hpp>

#include <gamma0/qseries.hpp>

#include <random>

using namespace gamma0;
using namespace gamma0::qseries;

namespace {

LaurentSeries geometric(long P) {
    std::vector<Rational> c(static_cast<size_t>(P), Rational(1));
    return LaurentSeries(0, std::move(c), P);
}

LaurentSeries random_series(std::mt19937& rng, long val_lo = -3, long val_hi = 3, long P = 12) {
    std::uniform_int_distribution<long> vd(val_lo, val_hi);
    std::uniform_int_distribution<int> cd(-9, 9);
    long v = vd(rng);
    std::vector<Rational> c;
    for (long e = v; e < P; ++e) c.emplace_back(cd(rng));
    if (c.empty() || c[0] == 0) c.insert(c.begin(), Rational(1 + (cd(rng) & 3)));
    return LaurentSeries(v, std::move(c), P);
}

bool agree(const LaurentSeries& a, const LaurentSeries& b) {
    long P = std::min(a.precision(), b.precision());
    return series_truncate(a, P) == series_truncate(b, P);
}

} // namespace

TEST_CASE("coefficient access respects the trust window") {
    auto f = LaurentSeries::monomial(-1, 3, 4);
    CHECK(f.valuation() == -1);
    CHECK(f.precision() == 4);
    CHECK(f.coefficient(-1) == 3);
    CHECK(f.coefficient(-2) == 0);
    CHECK(f.coefficient(3) == 0);
    CHECK_THROWS_AS(f.coefficient(4), std::out_of_range);

    auto z = LaurentSeries::zero(7);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 7);
    CHECK(z.coefficient(6) == 0);
}

TEST_CASE("multiplication: identities and precision propagation") {
    std::mt19937 rng(11);
    auto f = random_series(rng);
    CHECK(agree(series_mul(f, LaurentSeries::one(f.precision())), f));

    auto qi = LaurentSeries::monomial(-1, 1, 8);
    auto q = LaurentSeries::monomial(1, 1, 8);
    auto prod = series_mul(qi, q);
    CHECK(prod.coefficient(0) == 1);
    CHECK(prod == LaurentSeries::one(prod.precision()));

    auto one_minus_q = series_sub(LaurentSeries::one(10), LaurentSeries::monomial(1, 1, 10));
    auto g = series_mul(one_minus_q, geometric(10));
    CHECK(g == LaurentSeries::one(g.precision()));

    // justified precision: min(P_f + val_g, P_g + val_f)
    LaurentSeries a(2, {Rational(1), Rational(4)}, 5);
    LaurentSeries b(1, {Rational(2), Rational(0), Rational(1)}, 7);
    auto ab = series_mul(a, b);
    CHECK(ab.precision() == 6);
    CHECK(ab.valuation() == 3);
    CHECK(ab.coefficient(3) == 2);
    CHECK(ab.coefficient(4) == 8);
    CHECK(ab.coefficient(5) == 1);
}

TEST_CASE("inverse: examples and round trips") {
    auto one_minus_q = series_sub(LaurentSeries::one(10), LaurentSeries::monomial(1, 1, 10));
    CHECK(series_inverse(one_minus_q) == geometric(10));

    auto qi = LaurentSeries::monomial(-1, 1, 8);
    auto inv = series_inverse(qi);
    CHECK(inv.valuation() == 1);
    CHECK(inv.coefficient(1) == 1);

    std::mt19937 rng(2024);
    for (int t = 0; t < 25; ++t) {
        auto f = random_series(rng);
        auto p = series_mul(f, series_inverse(f));
        CHECK(p == LaurentSeries::one(p.precision()));
    }

    CHECK_THROWS_AS(series_inverse(LaurentSeries::zero(5)), std::domain_error);
}

TEST_CASE("ring laws on randomized series") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        auto f = random_series(rng), g = random_series(rng), h = random_series(rng);
        CHECK(agree(series_mul(f, g), series_mul(g, f)));
        CHECK(agree(series_mul(series_mul(f, g), h), series_mul(f, series_mul(g, h))));
        CHECK(agree(series_mul(series_add(f, g), h),
                    series_add(series_mul(f, h), series_mul(g, h))));
    }
}

TEST_CASE("log and exp") {
    CHECK(series_log(LaurentSeries::one(9)) == LaurentSeries::zero(9));

    auto one_minus_q = series_sub(LaurentSeries::one(10), LaurentSeries::monomial(1, 1, 10));
    auto lg = series_log(one_minus_q);
    for (long n = 1; n < 10; ++n)
        CHECK(lg.coefficient(n) == Rational(-1) / Rational(n));

    // exp(log(1 - q + q^2)) = 1 - q + q^2
    LaurentSeries f(0, {Rational(1), Rational(-1), Rational(1)}, 9);
    CHECK(series_exp(series_log(f)) == f);

    CHECK(series_exp(LaurentSeries::zero(6)) == LaurentSeries::one(6));
    CHECK_THROWS_AS(series_log(LaurentSeries::monomial(1, 1, 5)), std::domain_error);
    CHECK_THROWS_AS(series_exp(LaurentSeries::one(5)), std::domain_error);

    std::mt19937 rng(41);
    for (int t = 0; t < 10; ++t) {
        auto u = random_series(rng, 1, 2, 10);
        auto roundtrip = series_log(series_exp(u));
        CHECK(agree(roundtrip, u));
    }
}

TEST_CASE("eta products") {
    auto delta = delta_series(10);
    CHECK(delta.valuation() == 1);
    long tau[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480};
    for (long n = 1; n <= 8; ++n) CHECK(delta.coefficient(n) == tau[n - 1]);
    CHECK(delta.coefficient(6) == delta.coefficient(2) * delta.coefficient(3));

    auto f = eta_expand(EtaQuotient{{{1, 24}, {2, -24}}}, 4);
    CHECK(f.valuation() == -1);
    CHECK(f.coefficient(-1) == 1);
    CHECK(f.coefficient(0) == -24);
    CHECK(f.coefficient(1) == 276);
    CHECK(f.coefficient(2) == -2048);
    CHECK(f.coefficient(3) == 11202);

    CHECK(eta_expand(EtaQuotient{}, 6) == LaurentSeries::one(6));
    CHECK_THROWS_AS(eta_expand(EtaQuotient{{{1, 23}}}, 6), std::domain_error);
    CHECK_THROWS_AS(eta_expand(EtaQuotient{{{0, 24}}}, 6), std::domain_error);
}

TEST_CASE("j-function expansion") {
    auto j = j_function(5);
    CHECK(j.valuation() == -1);
    CHECK(j.coefficient(-1) == 1);
    CHECK(j.coefficient(0) == 744);
    CHECK(j.coefficient(1) == 196884);
    CHECK(j.coefficient(2) == 21493760);
    CHECK(j.coefficient(3) == 864299970);
    CHECK(j.coefficient(4) == Rational(Integer("20245856256")));
    CHECK(j.precision() == 5);
}

TEST_CASE("derivative and integral") {
    LaurentSeries f(1, {Rational(2), Rational(3), Rational(4)}, 4);
    auto df = series_derivative(f);
    CHECK(df.coefficient(0) == 2);
    CHECK(df.coefficient(1) == 6);
    CHECK(df.coefficient(2) == 12);
    CHECK(df.precision() == 3);
    CHECK(agree(series_integrate(df), f));

    auto qinv = LaurentSeries::monomial(-1, 1, 3);
    CHECK_THROWS_AS(series_integrate(qinv), std::domain_error);
}

#include <catch2/catch_amalgamated.hpp>

#include <gamma0/arith.hpp>
#include <gamma0/hauptmodul.hpp>

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

using namespace gamma0;
namespace hm = gamma0::hauptmodul;

namespace {

// Independent genus oracle for X_0(N): standard index/elliptic-point/cusp
// counts feeding g = 1 + psi/12 - nu2/4 - nu3/3 - ncusps/2.
long genus_x0(long N) {
    long psi = arith::dedekind_psi(N);
    long nu2 = 1, nu3 = 1;
    if (N % 4 == 0) nu2 = 0;
    else
        for (long long p : arith::prime_divisors(N)) {
            if (p == 2) continue;
            nu2 *= (p % 4 == 1) ? 2 : 0;
        }
    if (N % 9 == 0) nu3 = 0;
    else
        for (long long p : arith::prime_divisors(N)) {
            if (p == 3) continue;
            nu3 *= (p % 3 == 1) ? 2 : 0;
        }
    long cusps = 0;
    for (long long d : arith::divisors(N))
        cusps += arith::euler_phi(std::gcd(d, N / d));
    // 12g = 12 + psi - 3*nu2 - 4*nu3 - 6*cusps
    long twelve_g = 12 + psi - 3 * nu2 - 4 * nu3 - 6 * cusps;
    REQUIRE(twelve_g % 12 == 0);
    return twelve_g / 12;
}

} // namespace

TEST_CASE("genus-zero level list matches the genus formula") {
    const auto& levels = hm::genus_zero_levels();
    CHECK(levels == std::set<long>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 13, 16, 18, 25});
    CHECK(levels.count(1) == 1);
    CHECK(levels.count(11) == 0);
    CHECK(levels.count(25) == 1);
    for (long N = 1; N <= 40; ++N)
        CHECK((genus_x0(N) == 0) == (levels.count(N) == 1));
}

TEST_CASE("Hauptmodul q-expansions at frozen coefficients") {
    // a_N(1..k) per level, from an independent exact eta/j expansion
    std::map<long, std::vector<long>> frozen = {
        {1, {196884, 21493760, 864299970}},
        {2, {276, -2048, 11202, -49152, 184024, -614400, 1881471, -5373952}},
        {3, {54, -76, -243, 1188, -1384, -2916, 11934, -11580}},
        {4, {20, 0, -62, 0, 216, 0, -641, 0}},
        {5, {9, 10, -30, 6, -25, 96, 60, -250}},
        {7, {2, 8, -5, -4, -10, 12, -7, 8}},
        {9, {0, 5, 0, 0, -7, 0, 0, 3}},
        {13, {-1, 2, 1, 2, -2, 0, -2, -2}},
        {25, {-1, 0, 0, 1, 0, 1, 0, 0}},
    };
    for (auto& [N, coeffs] : frozen) {
        auto J = hm::hauptmodul(N, static_cast<long>(coeffs.size()) + 1);
        CHECK(J.valuation() == -1);
        CHECK(J.coefficient(-1) == 1);
        CHECK(J.coefficient(0) == 0);
        for (size_t r = 0; r < coeffs.size(); ++r)
            CHECK(J.coefficient(static_cast<long>(r) + 1) == coeffs[r]);
    }
    CHECK(hm::hauptmodul(1, 3).coefficient(2) == 21493760);
}

TEST_CASE("normalization and integrality hold through r = 64") {
    for (long N : hm::supported_levels()) {
        auto J = hm::hauptmodul(N, 65);
        CHECK(J.valuation() == -1);
        CHECK(J.coefficient(-1) == 1);
        CHECK(J.coefficient(0) == 0);
        for (long r = 1; r <= 64; ++r)
            CHECK(is_integer(J.coefficient(r)));
    }
}

TEST_CASE("unsupported levels are rejected with the supported list") {
    CHECK(hm::supported_levels() == std::set<long>{1, 2, 3, 4, 5, 7, 9, 13, 25});
    for (long N : {6L, 8L, 10L, 11L, 12L, 36L}) {
        try {
            hm::hauptmodul(N, 4);
            FAIL("expected rejection of level " << N);
        } catch (const std::domain_error& e) {
            CHECK(std::string(e.what()).find("supported") != std::string::npos);
        }
    }
}

TEST_CASE("coefficient helper") {
    CHECK(hm::hauptmodul_coefficient(2, -1) == 1);
    CHECK(hm::hauptmodul_coefficient(2, 0) == 0);
    CHECK(hm::hauptmodul_coefficient(2, 1) == 276);
    CHECK(hm::hauptmodul_coefficient(2, -4) == 0);
}

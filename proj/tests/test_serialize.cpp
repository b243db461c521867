#include <catch2/catch_amalgamated.hpp>

#include <gamma0/qseries.hpp>
#include <gamma0/serialize.hpp>

#include <cstdlib>

using gamma0::Rational;
using gamma0::qseries::LaurentSeries;
namespace io = gamma0::io;

TEST_CASE("doubles print shortest-exact and round-trip", "[serialize]") {
    CHECK(io::fmt_double(0.0) == "0");
    CHECK(io::fmt_double(1.5) == "1.5");
    CHECK(io::fmt_double(-24.0) == "-24");
    CHECK(io::fmt_double(0.1) == "0.10000000000000001");
    CHECK(io::fmt_double(1e22) == "1e+22");
    CHECK(io::fmt_double(1e300) == "1.0000000000000001e+300");

    // whatever the digit string looks like, strtod must recover the bits
    for (double v : {0.1, 1.0 / 3.0, 0.3819660112501051, -196884.00047599646,
                     1e-300, 2.2250738585072014e-308}) {
        std::string s = io::fmt_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("rationals print as integer or num/den", "[serialize]") {
    CHECK(io::fmt_rational(Rational(5)) == "5");
    CHECK(io::fmt_rational(Rational(-7, 3)) == "-7/3");
    CHECK(io::fmt_rational(Rational(7) / Rational(-3)) == "-7/3"); // sign lives on top
    CHECK(io::fmt_rational(Rational(6, 3)) == "2");
    CHECK(io::fmt_rational(Rational(0)) == "0");

    Rational big(1);
    for (int i = 0; i < 100; ++i) big *= Rational(2);
    CHECK(io::fmt_rational(big) == "1267650600228229401496703205376"); // 2^100
    CHECK(io::fmt_rational(big - Rational(1, 2)) ==
          "2535301200456458802993406410751/2");
}

TEST_CASE("json strings escape the usual suspects", "[serialize]") {
    CHECK(io::json_escape("plain") == "plain");
    CHECK(io::json_escape("a\"b") == "a\\\"b");
    CHECK(io::json_escape("a\\b") == "a\\\\b");
    CHECK(io::json_escape("a\nb") == "a\\nb");
    CHECK(io::json_escape("a\tb") == "a\\tb");
    CHECK(io::json_escape(std::string(1, '\x01')) == "\\u0001");
    CHECK(io::json_str("x\"y") == "\"x\\\"y\"");
}

TEST_CASE("series serialize with coefficients as exact strings", "[serialize]") {
    LaurentSeries f(-1, {Rational(1), Rational(0), Rational(276)}, 2);
    CHECK(io::series_json(f) ==
          "{\"valuation\":-1,\"precision\":2,\"coefficients\":[\"1\",\"0\",\"276\"]}");

    LaurentSeries g(0, {Rational(1, 2)}, 1);
    CHECK(io::series_json(g) ==
          "{\"valuation\":0,\"precision\":1,\"coefficients\":[\"1/2\"]}");
}

TEST_CASE("verification reports serialize with pinned field order", "[serialize]") {
    gamma0::borcherds::VerificationReport rep;
    rep.level = 2;
    rep.box_a = 4;
    rep.box_b = 3;
    rep.pass = false;
    rep.checked = 30;
    rep.mismatches.push_back({1, 2, Rational(-3), Rational(5, 2)});
    rep.max_abs_discrepancy = Rational(11, 2);
    rep.elapsed_ms = 12.5;
    rep.exponent_source = "corrupted";
    CHECK(io::report_json(rep) ==
          "{\"level\":2,\"box\":[4,3],\"pass\":false,"
          "\"mismatches\":[{\"i\":1,\"j\":2,\"lhs\":\"-3\",\"rhs\":\"5/2\"}],"
          "\"elapsed_ms\":12.5,\"exponent_source\":\"corrupted\"}");

    gamma0::borcherds::VerificationReport ok;
    ok.level = 1;
    ok.box_a = 6;
    ok.box_b = 6;
    ok.pass = true;
    ok.checked = 64;
    ok.max_abs_discrepancy = Rational(0);
    ok.elapsed_ms = 0.0;
    ok.exponent_source = "exact-hauptmodul";
    CHECK(io::report_json(ok) ==
          "{\"level\":1,\"box\":[6,6],\"pass\":true,\"mismatches\":[],"
          "\"elapsed_ms\":0,\"exponent_source\":\"exact-hauptmodul\"}");
}

TEST_CASE("csv fields quote only when needed", "[serialize]") {
    CHECK(io::csv_field("plain") == "plain");
    CHECK(io::csv_field("a,b") == "\"a,b\"");
    CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(io::csv_field("two\nlines") == "\"two\nlines\"");
    CHECK(io::csv_row({"r", "a"}) == "r,a\n");
    CHECK(io::csv_row({"1", "-24", "x,y"}) == "1,-24,\"x,y\"\n");
}

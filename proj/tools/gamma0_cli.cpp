#include <CLI11.hpp>

#include <gamma0/gamma0.hpp>

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace {

namespace io = gamma0::io;
using gamma0::Rational;

struct Global {
    std::string format = "text";
    std::string cache_dir;
    unsigned threads = 0;
    bool timing = false;
};

void add_global_options(CLI::App* cmd, Global& g) {
    cmd->add_option("--format", g.format, "Output format: json, csv, or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--cache-dir", g.cache_dir,
                    "Directory holding kloosterman.cache (env GAMMA0_CACHE_DIR)")
        ->envname("GAMMA0_CACHE_DIR");
    cmd->add_option("--threads", g.threads, "Worker threads, 0 picks the hardware count");
    cmd->add_flag("--timing", g.timing, "Include wall-clock timing in reports");
}

int cmd_haupt(long long level, long prec, const Global& g) {
    auto J = gamma0::hauptmodul::hauptmodul(level, prec);
    if (g.format == "json") {
        std::string out = "{\"level\":" + std::to_string(level) +
                          ",\"precision\":" + std::to_string(prec) + ",\"coefficients\":[";
        for (long r = -1; r < prec; ++r) {
            if (r > -1) out += ',';
            out += "{\"r\":" + std::to_string(r) +
                   ",\"a\":" + io::json_str(io::fmt_rational(J.coefficient(r))) + '}';
        }
        std::cout << out << "]}\n";
    } else if (g.format == "csv") {
        std::cout << io::csv_row({"r", "a"});
        for (long r = -1; r < prec; ++r)
            std::cout << io::csv_row({std::to_string(r), io::fmt_rational(J.coefficient(r))});
    } else {
        std::cout << "# Hauptmodul coefficients, level " << level << ", precision " << prec
                  << '\n';
        for (long r = -1; r < prec; ++r)
            std::cout << r << ' ' << io::fmt_rational(J.coefficient(r)) << '\n';
    }
    return 0;
}

int cmd_verify(long long level, long A, long B, bool corrupt, const Global& g) {
    gamma0::borcherds::VerifyOptions opt;
    opt.threads = g.threads;
    opt.timing = g.timing;
    opt.corrupt_exponent = corrupt;
    auto rep = gamma0::borcherds::verify_identity(level, A, B, opt);

    if (g.format == "json") {
        std::cout << io::report_json(rep) << '\n';
    } else if (g.format == "csv") {
        std::cout << io::csv_row({"level", "box_a", "box_b", "pass", "checked",
                                  "mismatch_count", "max_abs_discrepancy", "elapsed_ms",
                                  "exponent_source"});
        std::cout << io::csv_row({std::to_string(rep.level), std::to_string(rep.box_a),
                                  std::to_string(rep.box_b), rep.pass ? "true" : "false",
                                  std::to_string(rep.checked),
                                  std::to_string(rep.mismatches.size()),
                                  io::fmt_rational(rep.max_abs_discrepancy),
                                  io::fmt_double(rep.elapsed_ms), rep.exponent_source});
    } else {
        std::cout << "# product identity check, level " << rep.level << ", box (" << rep.box_a
                  << ',' << rep.box_b << ")\n"
                  << "factors: r <= " << rep.factor_rmax << ", s <= " << rep.factor_smax << '\n'
                  << "monomials checked: " << rep.checked << '\n'
                  << "exponent source: " << rep.exponent_source << '\n';
        for (const auto& m : rep.mismatches)
            std::cout << "mismatch at (" << m.i << ',' << m.j
                      << "): lhs=" << io::fmt_rational(m.lhs)
                      << " rhs=" << io::fmt_rational(m.rhs) << '\n';
        if (!rep.pass)
            std::cout << "max |lhs-rhs| = " << io::fmt_rational(rep.max_abs_discrepancy)
                      << '\n';
        if (g.timing) std::cout << "elapsed_ms: " << io::fmt_double(rep.elapsed_ms) << '\n';
        std::cout << "result: " << (rep.pass ? "PASS" : "FAIL") << '\n';
    }
    return rep.pass ? 0 : 1;
}

int cmd_poincare(long long level, long long rprime, long long r, long long cmax,
                 const Global& g) {
    auto p = gamma0::kernels::poincare_coeff(level, rprime, r, cmax, g.threads);
    if (g.format == "json") {
        std::cout << "{\"level\":" << p.level << ",\"rprime\":" << p.rp << ",\"r\":" << p.r
                  << ",\"cmax\":" << p.c_max << ",\"value\":" << io::fmt_double(p.value)
                  << ",\"tail_bound\":" << io::fmt_double(p.tail_bound) << "}\n";
    } else if (g.format == "csv") {
        std::cout << io::csv_row({"level", "rprime", "r", "cmax", "value", "tail_bound"});
        std::cout << io::csv_row({std::to_string(p.level), std::to_string(p.rp),
                                  std::to_string(p.r), std::to_string(p.c_max),
                                  io::fmt_double(p.value), io::fmt_double(p.tail_bound)});
    } else {
        std::cout << "# Poincare coefficient, level " << p.level << ", r'=" << p.rp
                  << ", r=" << p.r << ", c_max=" << p.c_max << '\n'
                  << "value: " << io::fmt_double(p.value) << '\n'
                  << "tail_bound: " << io::fmt_double(p.tail_bound) << '\n';
    }
    return 0;
}

int cmd_eisenstein(long long level, long long r, bool numeric, long long cmax,
                   const Global& g) {
    if (!numeric) {
        Rational v = gamma0::kernels::eisenstein_exact(level, r);
        if (g.format == "json") {
            std::cout << "{\"level\":" << level << ",\"r\":" << r << ",\"exact\":true"
                      << ",\"value\":" << io::json_str(io::fmt_rational(v)) << "}\n";
        } else if (g.format == "csv") {
            std::cout << io::csv_row({"level", "r", "exact", "cmax", "value", "tail_bound"});
            std::cout << io::csv_row({std::to_string(level), std::to_string(r), "true", "",
                                      io::fmt_rational(v), ""});
        } else {
            std::cout << "# Eisenstein coefficient, level " << level << ", r=" << r << '\n'
                      << "value: " << io::fmt_rational(v) << " (exact)\n";
        }
        return 0;
    }
    auto e = gamma0::kernels::eisenstein_numeric(level, r, cmax, g.threads);
    if (g.format == "json") {
        std::cout << "{\"level\":" << level << ",\"r\":" << r << ",\"exact\":false"
                  << ",\"cmax\":" << e.c_max << ",\"value\":" << io::fmt_double(e.value)
                  << ",\"tail_bound\":" << io::fmt_double(e.tail_bound) << "}\n";
    } else if (g.format == "csv") {
        std::cout << io::csv_row({"level", "r", "exact", "cmax", "value", "tail_bound"});
        std::cout << io::csv_row({std::to_string(level), std::to_string(r), "false",
                                  std::to_string(e.c_max), io::fmt_double(e.value),
                                  io::fmt_double(e.tail_bound)});
    } else {
        std::cout << "# Eisenstein coefficient, level " << level << ", r=" << r
                  << ", c_max=" << e.c_max << '\n'
                  << "value: " << io::fmt_double(e.value) << '\n'
                  << "tail_bound: " << io::fmt_double(e.tail_bound) << '\n';
    }
    return 0;
}

int cmd_kloosterman(long long a, long long b, long long c, const Global& g) {
    double value = 0.0;
    std::string source = "computed";
    if (!g.cache_dir.empty()) {
        const std::string path = g.cache_dir + "/kloosterman.cache";
        auto cache = gamma0::cache::load_kloosterman_cache(path);
        for (const auto& w : cache.warnings) std::cerr << "warning: " << w << '\n';
        const size_t seen = cache.warnings.size();
        if (auto hit = gamma0::cache::lookup(cache, a, b, c)) {
            value = *hit;
            source = "cache";
        } else {
            value = gamma0::arith::kloosterman(a, b, c);
            cache.entries[{c, a, b}] = value;
            gamma0::cache::save_kloosterman_cache(cache, path);
        }
        for (size_t i = seen; i < cache.warnings.size(); ++i)
            std::cerr << "warning: " << cache.warnings[i] << '\n';
    } else {
        value = gamma0::arith::kloosterman(a, b, c);
    }

    if (g.format == "json") {
        std::cout << "{\"a\":" << a << ",\"b\":" << b << ",\"c\":" << c
                  << ",\"value\":" << io::fmt_double(value)
                  << ",\"source\":" << io::json_str(source) << "}\n";
    } else if (g.format == "csv") {
        std::cout << io::csv_row({"a", "b", "c", "value", "source"});
        std::cout << io::csv_row({std::to_string(a), std::to_string(b), std::to_string(c),
                                  io::fmt_double(value), source});
    } else {
        std::cout << "K(" << a << ',' << b << ';' << c << ") = " << io::fmt_double(value)
                  << " (" << source << ")\n";
    }
    return 0;
}

int cmd_selberg(long long r, long long rp, long long c, double tol, const Global& g) {
    auto [lhs, rhs] = gamma0::arith::selberg_sides(r, rp, c);
    const double diff = std::abs(lhs - rhs);
    const double allowance = tol * static_cast<double>(gamma0::arith::divisor_count(c))
                           * std::sqrt(static_cast<double>(c));
    const bool pass = diff <= allowance;

    if (g.format == "json") {
        std::cout << "{\"r\":" << r << ",\"rprime\":" << rp << ",\"c\":" << c
                  << ",\"lhs\":" << io::fmt_double(lhs) << ",\"rhs\":" << io::fmt_double(rhs)
                  << ",\"difference\":" << io::fmt_double(diff)
                  << ",\"allowance\":" << io::fmt_double(allowance)
                  << ",\"pass\":" << (pass ? "true" : "false") << "}\n";
    } else if (g.format == "csv") {
        std::cout << io::csv_row({"r", "rprime", "c", "lhs", "rhs", "difference",
                                  "allowance", "pass"});
        std::cout << io::csv_row({std::to_string(r), std::to_string(rp), std::to_string(c),
                                  io::fmt_double(lhs), io::fmt_double(rhs),
                                  io::fmt_double(diff), io::fmt_double(allowance),
                                  pass ? "true" : "false"});
    } else {
        std::cout << "# Selberg identity, K(r,r';c) vs divisor side, r=" << r << ", r'=" << rp
                  << ", c=" << c << '\n'
                  << "lhs: " << io::fmt_double(lhs) << '\n'
                  << "rhs: " << io::fmt_double(rhs) << '\n'
                  << "difference: " << io::fmt_double(diff) << '\n'
                  << "allowance: " << io::fmt_double(allowance) << '\n'
                  << "result: " << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? 0 : 1;
}

int cmd_hecke(long long level, long weight, long long m, long prec, const Global& g) {
    if (level != 11 || weight != 2)
        throw std::domain_error(
            "hecke-apply: the bundled fixture is the level-11 weight-2 cusp form "
            "(pass --level 11 --weight 2)");
    auto f = gamma0::hecke::eta_square_form(level, prec);
    auto Tf = gamma0::hecke::hecke_apply(weight, m, f);
    const auto& s = Tf.series;

    if (g.format == "json") {
        std::cout << "{\"weight\":" << Tf.weight << ",\"level\":" << Tf.level
                  << ",\"m\":" << m << ",\"input_precision\":" << prec
                  << ",\"series\":" << io::series_json(s) << "}\n";
    } else if (g.format == "csv") {
        std::cout << io::csv_row({"n", "b"});
        for (long n = s.valuation(); n < s.precision(); ++n)
            std::cout << io::csv_row({std::to_string(n), io::fmt_rational(s.coefficient(n))});
    } else {
        std::cout << "# T(" << m << ") on the level-11 weight-2 form, output precision "
                  << s.precision() << '\n';
        for (long n = s.valuation(); n < s.precision(); ++n)
            std::cout << n << ' ' << io::fmt_rational(s.coefficient(n)) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus-zero Hauptmodul expansions, Kloosterman and Bessel sums, and the\n"
                 "two-variable infinite-product identity verifier."};
    app.require_subcommand(1);
    Global g;

    long long h_level = 1;
    long h_prec = 8;
    auto* haupt = app.add_subcommand("haupt", "Hauptmodul q-expansion coefficients");
    haupt->add_option("--level", h_level, "Level N")->required()->check(CLI::PositiveNumber);
    haupt->add_option("--prec", h_prec, "Print a_N(r) for -1 <= r < prec")
        ->check(CLI::PositiveNumber);
    add_global_options(haupt, g);

    long long v_level = 1;
    std::vector<long> v_box{6};
    bool v_corrupt = false;
    auto* verify = app.add_subcommand("verify-borcherds",
                                      "Check the product identity over a (p,q) box");
    verify->add_option("--level", v_level, "Level N")->required()->check(CLI::PositiveNumber);
    verify->add_option("--box", v_box, "Box bound A, or a pair A B")
        ->expected(1, 2)
        ->check(CLI::PositiveNumber);
    verify->add_flag("--corrupt-exponent", v_corrupt)->group("");
    add_global_options(verify, g);

    long long p_level = 1, p_rprime = 1, p_r = 1, p_cmax = 10000;
    auto* poincare = app.add_subcommand("poincare",
                                        "Truncated Poincare coefficient with tail bound");
    poincare->add_option("--level", p_level, "Level N")->required()->check(CLI::PositiveNumber);
    poincare->add_option("--rprime", p_rprime, "Nonzero parameter r'")->required();
    poincare->add_option("--r", p_r, "Positive index r")->required()->check(CLI::PositiveNumber);
    poincare->add_option("--cmax", p_cmax, "Sum over N | c <= cmax")->check(CLI::PositiveNumber);
    add_global_options(poincare, g);

    long long e_level = 1, e_r = 1, e_cmax = 10000;
    bool e_exact = false;
    auto* eis = app.add_subcommand("eisenstein",
                                   "Eisenstein coefficient, exact or as a truncated sum");
    eis->add_option("--level", e_level, "Level N")->required()->check(CLI::PositiveNumber);
    eis->add_option("--r", e_r, "Positive index r")->required()->check(CLI::PositiveNumber);
    auto* e_exact_flag = eis->add_flag("--exact", e_exact, "Exact divisor-sum closed form");
    auto* e_cmax_opt = eis->add_option("--cmax", e_cmax, "Truncation for the numeric sum")
                           ->check(CLI::PositiveNumber);
    e_exact_flag->excludes(e_cmax_opt);
    add_global_options(eis, g);

    long long k_a = 0, k_b = 0, k_c = 1;
    auto* klo = app.add_subcommand("kloosterman", "Single Kloosterman sum K(a,b;c)");
    klo->add_option("a", k_a, "First argument")->required();
    klo->add_option("b", k_b, "Second argument")->required();
    klo->add_option("c", k_c, "Modulus")->required()->check(CLI::PositiveNumber);
    add_global_options(klo, g);

    long long s_r = 1, s_rp = 1, s_c = 1;
    double s_tol = 1e-8;
    auto* sel = app.add_subcommand("selberg",
                                   "Both sides of the Selberg identity at (r, r', c)");
    sel->add_option("r", s_r, "First index")->required();
    sel->add_option("rprime", s_rp, "Second index")->required();
    sel->add_option("c", s_c, "Modulus")->required()->check(CLI::PositiveNumber);
    sel->add_option("--tol", s_tol, "Allowance is tol * d(c) * sqrt(c)")
        ->check(CLI::PositiveNumber);
    add_global_options(sel, g);

    long long hk_level = 11, hk_m = 2;
    long hk_weight = 2, hk_prec = 40;
    auto* hk = app.add_subcommand("hecke-apply", "Apply T(m) to the level-11 fixture");
    hk->add_option("--m", hk_m, "Operator index")->required()->check(CLI::PositiveNumber);
    hk->add_option("--prec", hk_prec, "Fixture precision before the operator")
        ->check(CLI::PositiveNumber);
    hk->add_option("--level", hk_level, "Level (fixture: 11)")->check(CLI::PositiveNumber);
    hk->add_option("--weight", hk_weight, "Weight (fixture: 2)")->check(CLI::PositiveNumber);
    add_global_options(hk, g);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(haupt)) return cmd_haupt(h_level, h_prec, g);
        if (app.got_subcommand(verify)) {
            long A = v_box[0];
            long B = v_box.size() > 1 ? v_box[1] : v_box[0];
            return cmd_verify(v_level, A, B, v_corrupt, g);
        }
        if (app.got_subcommand(poincare)) {
            if (p_rprime == 0) {
                std::cerr << "error: --rprime must be nonzero\n";
                return 2;
            }
            return cmd_poincare(p_level, p_rprime, p_r, p_cmax, g);
        }
        if (app.got_subcommand(eis))
            return cmd_eisenstein(e_level, e_r, e_cmax_opt->count() > 0, e_cmax, g);
        if (app.got_subcommand(klo)) return cmd_kloosterman(k_a, k_b, k_c, g);
        if (app.got_subcommand(sel)) return cmd_selberg(s_r, s_rp, s_c, s_tol, g);
        if (app.got_subcommand(hk)) return cmd_hecke(hk_level, hk_weight, hk_m, hk_prec, g);
    } catch (const gamma0::special::TruncationError& e) {
        std::cerr << "error: " << e.what() << " (partial value "
                  << io::fmt_double(e.partial_value) << ", tail bound "
                  << io::fmt_double(e.tail_bound) << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

#pragma once

// Deterministic text encodings: floating values always carry 17 significant
// digits (exact double round trip), rationals print as num or num/den, JSON
// objects keep a fixed field order. Identical data must serialize to
// identical bytes, so everything here is built from plain string assembly.

#include "borcherds.hpp"
#include "qseries.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace gamma0::io {

inline std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_rational(const Rational& x) {
    if (is_integer(x)) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

inline std::string json_str(const std::string& s) { return "\"" + json_escape(s) + "\""; }

// {"valuation":v,"precision":P,"coefficients":["..",...]} with one exact
// rational string per exponent from the valuation up to the trust bound.
inline std::string series_json(const qseries::LaurentSeries& f) {
    std::string out = "{\"valuation\":" + std::to_string(f.valuation()) +
                      ",\"precision\":" + std::to_string(f.precision()) +
                      ",\"coefficients\":[";
    for (long e = f.valuation(); e < f.precision(); ++e) {
        if (e > f.valuation()) out += ',';
        out += json_str(fmt_rational(f.coefficient(e)));
    }
    out += "]}";
    return out;
}

inline std::string report_json(const borcherds::VerificationReport& rep) {
    std::string out = "{\"level\":" + std::to_string(rep.level) +
                      ",\"box\":[" + std::to_string(rep.box_a) + ',' +
                      std::to_string(rep.box_b) + "]" +
                      ",\"pass\":" + (rep.pass ? "true" : "false") +
                      ",\"mismatches\":[";
    bool first = true;
    for (const auto& m : rep.mismatches) {
        if (!first) out += ',';
        first = false;
        out += "{\"i\":" + std::to_string(m.i) + ",\"j\":" + std::to_string(m.j) +
               ",\"lhs\":" + json_str(fmt_rational(m.lhs)) +
               ",\"rhs\":" + json_str(fmt_rational(m.rhs)) + "}";
    }
    out += "],\"elapsed_ms\":" + fmt_double(rep.elapsed_ms) +
           ",\"exponent_source\":" + json_str(rep.exponent_source) + "}";
    return out;
}

// Minimal CSV quoting: fields containing separators, quotes, or newlines are
// wrapped and inner quotes doubled; everything else passes through bare.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += '"';
    return out;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

} // namespace gamma0::io

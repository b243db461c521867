#pragma once

// Advisory on-disk cache for Kloosterman sums. Line-oriented text:
//
//   KLOOSTERMAN-CACHE v1
//   c a b value
//   ...
//
// with value carrying 17 significant digits, enough to reproduce the double
// exactly. Lines may appear in any order; duplicate keys resolve to the
// last occurrence. A recognizable header with a different version makes the
// file read-protected: its entries are ignored and save() refuses to clobber
// it. Any other damage (missing header, malformed lines) is reported through
// the warning list and falls back to recomputation.

#include "arith.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace gamma0::cache {

constexpr const char* kloosterman_cache_header = "KLOOSTERMAN-CACHE v1";

struct KloostermanCache {
    using Key = std::tuple<long long, long long, long long>; // (c, a, b)
    std::map<Key, double> entries;
    bool writable = true;
    std::vector<std::string> warnings;
};

inline std::string format_cache_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline KloostermanCache load_kloosterman_cache(const std::string& path) {
    KloostermanCache cache;
    std::ifstream in(path);
    if (!in) return cache; // a fresh path is not a diagnostic event

    std::string header;
    if (!std::getline(in, header)) {
        cache.warnings.push_back(path + ": empty cache file, recomputing");
        return cache;
    }
    if (!header.empty() && header.back() == '\r') header.pop_back();
    if (header != kloosterman_cache_header) {
        if (header.rfind("KLOOSTERMAN-CACHE", 0) == 0) {
            cache.writable = false;
            cache.warnings.push_back(path + ": unknown cache version \"" + header +
                                     "\", ignoring file and leaving it untouched");
        } else {
            cache.warnings.push_back(path + ": bad cache header, recomputing");
        }
        return cache;
    }

    std::string line;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream ls(line);
        long long c, a, b;
        double value;
        std::string extra;
        if (!(ls >> c >> a >> b >> value) || (ls >> extra) || c < 1) {
            cache.warnings.push_back(path + ":" + std::to_string(line_no) +
                                     ": malformed cache line skipped");
            continue;
        }
        cache.entries[{c, a, b}] = value;
    }
    return cache;
}

inline std::optional<double> lookup(const KloostermanCache& cache, long long a,
                                    long long b, long long c) {
    auto it = cache.entries.find({c, a, b});
    if (it == cache.entries.end()) return std::nullopt;
    return it->second;
}

// Cache-through evaluation; records the value on a miss.
inline double cached_kloosterman(KloostermanCache& cache, long long a, long long b,
                                 long long c) {
    if (auto hit = lookup(cache, a, b, c)) return *hit;
    double v = arith::kloosterman(a, b, c);
    cache.entries[{c, a, b}] = v;
    return v;
}

// Rewrites the whole file, keys ascending, so identical contents always
// produce identical bytes. Returns false (with a warning) when the path is
// occupied by a cache of a different version.
inline bool save_kloosterman_cache(KloostermanCache& cache, const std::string& path) {
    if (!cache.writable) {
        cache.warnings.push_back(path + ": not overwriting a cache of a different version");
        return false;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) {
        cache.warnings.push_back(path + ": cache not writable, values not persisted");
        return false;
    }
    out << kloosterman_cache_header << '\n';
    for (const auto& [key, value] : cache.entries) {
        const auto& [c, a, b] = key;
        out << c << ' ' << a << ' ' << b << ' ' << format_cache_value(value) << '\n';
    }
    return static_cast<bool>(out);
}

} // namespace gamma0::cache

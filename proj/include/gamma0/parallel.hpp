#pragma once

// Deterministic parallel reduction for the c-sweeps. The index range is cut
// into fixed-size chunks; each chunk is accumulated in ascending index order
// with compensated summation, and chunk partials are folded in chunk order.
// Chunk boundaries never depend on the thread count, so results are
// bit-identical whether the sweep runs on one thread or many.

#include "arith.hpp"

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace gamma0::parallel {

inline constexpr long long default_chunk = 256;

inline unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Accumulates `dim` simultaneous sums over indices [begin, end). `term` is
// called once per index and adds its contributions via the Kahan slots.
template <class Term>
std::vector<double> chunked_sum(long long begin, long long end, std::size_t dim,
                                unsigned threads, Term&& term,
                                long long chunk = default_chunk) {
    std::vector<double> total(dim, 0.0);
    if (end <= begin) return total;
    const long long n = end - begin;
    const long long nchunks = (n + chunk - 1) / chunk;
    std::vector<std::vector<detail::Kahan>> partial(static_cast<size_t>(nchunks));

    std::atomic<long long> next{0};
    auto worker = [&] {
        for (;;) {
            long long ci = next.fetch_add(1);
            if (ci >= nchunks) return;
            auto& acc = partial[static_cast<size_t>(ci)];
            acc.assign(dim, detail::Kahan{});
            const long long lo = begin + ci * chunk;
            const long long hi = std::min(end, lo + chunk);
            for (long long i = lo; i < hi; ++i) term(i, acc.data());
        }
    };

    unsigned T = resolve_threads(threads);
    if (T <= 1 || nchunks == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        unsigned spawn = static_cast<unsigned>(std::min<long long>(T, nchunks));
        pool.reserve(spawn);
        for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<detail::Kahan> fold(dim);
    for (long long ci = 0; ci < nchunks; ++ci)
        for (std::size_t d = 0; d < dim; ++d)
            fold[d].add(partial[static_cast<size_t>(ci)][d].value());
    for (std::size_t d = 0; d < dim; ++d) total[d] = fold[d].value();
    return total;
}

} // namespace gamma0::parallel

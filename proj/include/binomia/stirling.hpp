#pragma once

// Stirling number tables for the monomial <-> falling-factorial basis
// change. Grown on demand by the standard recurrences, cached per process;
// the mutex keeps concurrent growth safe.

#include "binomia/rational.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace binomia {

namespace detail {

struct StirlingCache {
    std::mutex mu;
    // second[n][k] = S2(n,k); first[n][k] = signed s1(n,k)
    std::vector<std::vector<BigInt>> second{{BigInt(1)}};
    std::vector<std::vector<BigInt>> first{{BigInt(1)}};
};

inline StirlingCache& stirling_cache() {
    static StirlingCache cache;
    return cache;
}

} // namespace detail

// S2(n,k): n^j = sum_k S2(j,k) * ff_k(n).
inline BigInt stirling_second(std::size_t n, std::size_t k) {
    if (k > n)
        return BigInt(0);
    auto& cache = detail::stirling_cache();
    std::scoped_lock lock(cache.mu);
    auto& t = cache.second;
    for (std::size_t r = t.size(); r <= n; ++r) {
        std::vector<BigInt> row(r + 1);
        row[0] = 0;
        for (std::size_t c = 1; c <= r; ++c)
            row[c] = BigInt(c) * (c < r ? t[r - 1][c] : BigInt(0)) + t[r - 1][c - 1];
        t.push_back(std::move(row));
    }
    return t[n][k];
}

// Signed s1(n,k): ff_n(x) = sum_k s1(n,k) * x^k.
inline BigInt stirling_first_signed(std::size_t n, std::size_t k) {
    if (k > n)
        return BigInt(0);
    auto& cache = detail::stirling_cache();
    std::scoped_lock lock(cache.mu);
    auto& t = cache.first;
    for (std::size_t r = t.size(); r <= n; ++r) {
        std::vector<BigInt> row(r + 1);
        row[0] = 0;
        for (std::size_t c = 1; c <= r; ++c)
            row[c] = (c < r ? -BigInt(r - 1) * t[r - 1][c] : BigInt(0)) + t[r - 1][c - 1];
        t.push_back(std::move(row));
    }
    return t[n][k];
}

} // namespace binomia

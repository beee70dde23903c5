#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"

namespace lfkit {

/// Ascending table of all primes p <= limit.
struct PrimeTable {
    std::uint64_t limit = 0;
    std::vector<std::uint32_t> primes;

    std::size_t count() const { return primes.size(); }
};

inline constexpr std::uint64_t kSieveMaxLimit = 100'000'000;

/// Segmented sieve of Eratosthenes for 2 <= limit <= 1e8.
///
/// Memory stays O(sqrt(limit) + segment) beyond the output vector itself:
/// base primes up to sqrt(limit) come from a small classic sieve, then each
/// window [lo, lo+2^18) is marked independently.
inline PrimeTable sieve(std::uint64_t limit) {
    if (limit < 2)
        throw bounds_error("sieve: limit must be at least 2, got " + std::to_string(limit));
    if (limit > kSieveMaxLimit)
        throw bounds_error("sieve: limit must be at most 1e8, got " + std::to_string(limit));

    const std::uint64_t root = isqrt64(limit);

    std::vector<std::uint8_t> small(root + 1, 1);
    std::vector<std::uint32_t> base;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
    }

    PrimeTable table;
    table.limit = limit;
    // pi(x) ~ x / (log x - 1); headroom avoids reallocation for every x >= 17
    table.primes.reserve(static_cast<std::size_t>(
        limit < 17 ? 8 : static_cast<double>(limit) / (std::log(static_cast<double>(limit)) - 1.1)));

    constexpr std::uint64_t kSegment = 1u << 18;
    std::vector<std::uint8_t> mark(kSegment);
    for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
        const std::uint64_t hi = std::min(lo + kSegment - 1, limit);
        const std::uint64_t len = hi - lo + 1;
        std::fill(mark.begin(), mark.begin() + len, 1);
        for (std::uint32_t p : base) {
            const std::uint64_t p64 = p;
            if (p64 * p64 > hi) break;
            std::uint64_t start = std::max(p64 * p64, ((lo + p64 - 1) / p64) * p64);
            for (std::uint64_t j = start; j <= hi; j += p64) mark[j - lo] = 0;
        }
        for (std::uint64_t j = 0; j < len; ++j)
            if (mark[j]) table.primes.push_back(static_cast<std::uint32_t>(lo + j));
    }
    return table;
}

namespace detail {
inline void require_covered(const PrimeTable& table, std::uint64_t X, const char* op) {
    if (X > table.limit)
        throw bounds_error(std::string(op) + ": cutoff " + std::to_string(X) +
                           " exceeds table limit " + std::to_string(table.limit));
}
} // namespace detail

/// Chebyshev theta: sum of log p over primes p <= X, compensated summation.
inline double chebyshev_theta(const PrimeTable& table, std::uint64_t X) {
    detail::require_covered(table, X, "chebyshev_theta");
    kahan_sum s;
    for (std::uint32_t p : table.primes) {
        if (p > X) break;
        s.add(std::log(static_cast<double>(p)));
    }
    return s.value();
}

/// Sum of 1/p over primes p <= X, compensated summation.
inline double mertens_recip(const PrimeTable& table, std::uint64_t X) {
    detail::require_covered(table, X, "mertens_recip");
    kahan_sum s;
    for (std::uint32_t p : table.primes) {
        if (p > X) break;
        s.add(1.0 / static_cast<double>(p));
    }
    return s.value();
}

} // namespace lfkit

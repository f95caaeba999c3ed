#ifndef BURN_BOUNDS_HPP
#define BURN_BOUNDS_HPP

#include "burn/errors.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace burn {

/// Floor integer square root, exact for all inputs in range.
inline std::uint64_t isqrt_u64(std::uint64_t x) {
    if (x < 2) return x;
    auto sq = [](std::uint64_t r) { return static_cast<unsigned __int128>(r) * r; };
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && sq(r) > x) --r;
    while (sq(r + 1) <= x) ++r;
    return r;
}

/// Length of the burning schedule the decomposition produces for a tree of
/// order n: the smallest k >= 1 with 3k^2 - 16k >= 4n. Equals the exact
/// integer evaluation of ceil((sqrt(12n+64)+8)/3); both routes are computed
/// and cross-checked.
inline int burning_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("burning_bound: order must be positive");

    // Route 1: integer search seeded from an isqrt estimate of sqrt(4n/3).
    auto feasible = [&](std::int64_t q) { return q >= 1 && 3 * q * q - 16 * q >= 4 * n; };
    std::int64_t k = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(4 * n / 3)));
    if (k < 1) k = 1;
    while (!feasible(k)) ++k;
    while (k > 1 && feasible(k - 1)) --k;

    // Route 2: ceiling of (sqrt(12n+64)+8)/3 without floating point, as the
    // smallest k with 3k-8 >= 0 and (3k-8)^2 >= 12n+64.
    const std::uint64_t s = 12 * static_cast<std::uint64_t>(n) + 64;
    auto feasible_cf = [&](std::int64_t q) {
        const std::int64_t t = 3 * q - 8;
        return t >= 0 && static_cast<unsigned __int128>(t) * static_cast<unsigned __int128>(t) >= s;
    };
    std::int64_t kc = (static_cast<std::int64_t>(isqrt_u64(s)) + 8 + 2) / 3;
    if (kc < 1) kc = 1;
    while (!feasible_cf(kc)) ++kc;
    while (kc > 1 && feasible_cf(kc - 1)) --kc;

    detail::require_internal(k == kc, "burning_bound: search and closed form disagree");
    return static_cast<int>(k);
}

/// ceil((sqrt(24n+33)-3)/4): the smallest k with (4k+3)^2 >= 24n+33.
inline int land_lu_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("land_lu_bound: order must be positive");
    const std::uint64_t s = 24 * static_cast<std::uint64_t>(n) + 33;
    auto feasible = [&](std::int64_t q) {
        const std::int64_t t = 4 * q + 3;
        return static_cast<unsigned __int128>(t) * static_cast<unsigned __int128>(t) >= s;
    };
    std::int64_t k = (static_cast<std::int64_t>(isqrt_u64(s)) - 3) / 4;
    if (k < 0) k = 0;
    while (!feasible(k)) ++k;
    while (k > 0 && feasible(k - 1)) --k;
    return static_cast<int>(k);
}

/// ceil(sqrt(n)), exact.
inline int ceil_sqrt(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("ceil_sqrt: negative input");
    const std::uint64_t r = isqrt_u64(static_cast<std::uint64_t>(n));
    return static_cast<int>(r * r == static_cast<std::uint64_t>(n) ? r : r + 1);
}

/// ceil((sqrt(8n+1)+1)/2): the schedule length at which the elementary
/// ancestor-subtree scheme is guaranteed to cover a tree of order n.
/// Smallest k with (2k-1)^2 >= 8n+1.
inline int elementary_bound(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("elementary_bound: order must be positive");
    const std::uint64_t s = 8 * static_cast<std::uint64_t>(n) + 1;
    auto feasible = [&](std::int64_t q) {
        const std::int64_t t = 2 * q - 1;
        return t >= 0 && static_cast<unsigned __int128>(t) * static_cast<unsigned __int128>(t) >= s;
    };
    std::int64_t k = (static_cast<std::int64_t>(isqrt_u64(s)) + 1) / 2;
    if (k < 1) k = 1;
    while (!feasible(k)) ++k;
    while (k > 1 && feasible(k - 1)) --k;
    return static_cast<int>(k);
}

struct ReferenceBounds {
    int land_lu;
    int ceil_sqrt;
};

/// Prior bounds reported alongside the new one in benchmark output.
inline ReferenceBounds reference_bounds(std::int64_t n) {
    return ReferenceBounds{land_lu_bound(n), ceil_sqrt(n)};
}

} // namespace burn

#endif // BURN_BOUNDS_HPP

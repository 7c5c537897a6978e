#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "tallycone/error.hpp"
#include "tallycone/types.hpp"

namespace tallycone {

/// Exact binomial coefficient; zero whenever k lies outside [0, n].
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Int factorial(std::int64_t n) {
    Int r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Int int_pow(const Int& base, std::uint64_t e) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(e));
}

/// lcm(1, 2, ..., n).
inline std::int64_t lcm_upto(int n) {
    std::int64_t l = 1;
    for (int i = 2; i <= n; ++i) l = std::lcm(l, static_cast<std::int64_t>(i));
    return l;
}

inline std::vector<std::int64_t> sorted_divisors(std::int64_t v) {
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= v; ++d) {
        if (v % d != 0) continue;
        small.push_back(d);
        if (d != v / d) large.push_back(v / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace tallycone

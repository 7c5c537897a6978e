#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tallycone/types.hpp"

namespace tallycone {

/// Hilbert function values H(n, G) for G = 0..max listed in order.
struct CountTable {
    int teams = 0;
    std::vector<std::pair<std::int64_t, Int>> values;
};

/// Counting polynomial with periodically varying coefficients: one
/// coefficient row per residue class of G mod period, column l holding the
/// exact rational coefficient of G^l.
struct Quasipolynomial {
    std::int64_t period = 1;
    int degree = 0;
    std::vector<std::vector<Rat>> classes;

    Rat evaluate(std::int64_t g) const;
    const Rat& leading_coefficient() const { return classes.front().back(); }
};

/// Number of ordered score sheets with n teams and G goals in total.
///
/// Grouping sheets by their weakly decreasing goal vector (g_1,...,g_n)
/// reduces the count to a weighted partition sum: each part g contributes a
/// factor C(g+n-2, n-2), the number of ways one team distributes g goals
/// over its n-1 opponents. A bounded-part dynamic program evaluates the sum
/// in O(G^2 n) big-integer operations.
Int count_ordered(int teams, std::int64_t total);

/// Table of count_ordered values for G = 0..max_total, sharing one DP pass.
CountTable count_ordered_table(int teams, std::int64_t max_total);

/// Independent oracle: enumerates every cell vector with the given total and
/// counts the ordered ones. Guarded to n <= 5, G <= 8.
Int count_ordered_bruteforce(int teams, std::int64_t total);

/// Sheets with n teams and G goals, order ignored: C(n^2-n+G-1, G).
Int count_unordered(int teams, std::int64_t total);

/// Sheets with at most G goals: C(n^2-n+G, G).
Int count_unordered_cumulative(int teams, std::int64_t total);

/// Fits the degree-(n^2-n-1) quasipolynomial of count_ordered under an
/// assumed period, solving one exact Vandermonde system per residue class
/// and validating each class on as many fresh sample points again.
/// threads > 1 distributes residue classes across workers.
Quasipolynomial fit_quasipolynomial(int teams, std::int64_t period, int threads = 1);

/// Smallest period (a divisor of lcm(1..n), the degree lcm of the extreme
/// generators) whose fit validates.
std::int64_t minimal_period(int teams, int max_teams = 5, int threads = 1);

/// Normalized leading behavior a_{d-1} * (d-1)! of the fitted
/// quasipolynomial; equals 1/n!.
Rat multiplicity_of(int teams, int threads = 1);

}  // namespace tallycone

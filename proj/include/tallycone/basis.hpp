#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tallycone/sheet.hpp"
#include "tallycone/types.hpp"

namespace tallycone {

inline constexpr std::uint64_t kDefaultSeed = 2010;

/// Irreducible generator: teams 1..scorers each scored exactly one goal,
/// everyone else scored none.
struct HBElement {
    ScoreSheet sheet;
    int scorers;
};

struct Decomposition {
    ScoreSheet target;
    std::vector<HBElement> parts;
};

/// Scoring-team count of a basis-shaped sheet, or -1 when the sheet does not
/// have the one-goal-per-scoring-row shape.
int hb_scorers(const ScoreSheet& s);

/// All irreducible generators of the ordered-sheet monoid, sorted
/// lexicographically by storage vector. Cardinality is sum_{i=1..n} (n-1)^i.
std::vector<HBElement> hilbert_basis(int teams);

Int hb_cardinality(int teams);

/// Greedy decomposition of an ordered sheet into irreducible generators.
/// Repeatedly peels the generator scoring one goal in each of the rows
/// 1..r, where r is the last team with goals left and each row donates its
/// first nonzero cell. Parts always sum back to the input.
Decomposition decompose(const ScoreSheet& s);

struct VerificationReport {
    Index sheets_checked = 0;
    Index pairs_checked = 0;
    /// Sampled ordered sheets that could not be written as sums over the
    /// candidate set.
    std::vector<ScoreSheet> generation_failures;
    /// Index pairs (i, j) with candidate[i] - candidate[j] still a member,
    /// i.e. candidate[j] reduces candidate[i].
    std::vector<std::pair<Index, Index>> irreducibility_failures;

    bool generation_passed() const { return generation_failures.empty(); }
    bool irreducibility_passed() const { return irreducibility_failures.empty(); }
    bool passed() const { return generation_passed() && irreducibility_passed(); }
};

/// Checks a candidate generating set both ways: every sampled ordered sheet
/// (all with total <= 4, plus 1000 seeded random ones with total <= 20)
/// decomposes over the candidates, and no candidate reduces another.
VerificationReport verify_hilbert_basis(int teams, const std::vector<ScoreSheet>& candidate,
                                        std::uint64_t seed = kDefaultSeed);

/// True iff s is a finite sum of candidate elements staying inside the
/// monoid; memoized search, throws BudgetExceeded past node_budget states.
bool decomposes_over(const ScoreSheet& s, const std::vector<ScoreSheet>& candidate,
                     std::size_t node_budget = 2'000'000);

/// All ordered sheets with the given team count and exact goal total, in
/// lexicographic cell order.
std::vector<ScoreSheet> enumerate_ordered_sheets(int teams, int total);

/// Deterministic pseudo-random ordered sheets (uniform cell placement, then
/// canonicalized), totals at most max_total.
std::vector<ScoreSheet> sample_ordered_sheets(int teams, int count, int max_total,
                                              std::uint64_t seed);

}  // namespace tallycone

#pragma once

#include <vector>

#include "tallycone/error.hpp"
#include "tallycone/types.hpp"

namespace tallycone {

/// Flat index of the off-diagonal cell (i,j) in diagonal-free row-major
/// storage, 0-based: row i holds its n-1 cells in column order.
inline Index cell_index(int teams, int i, int j) {
    return static_cast<Index>(i) * (teams - 1) + (j < i ? j : j - 1);
}

/// Round-robin score sheet: g_ij goals scored by team i against team j,
/// held as a diagonal-free row-major vector of length n(n-1).
/// Immutable after construction.
class ScoreSheet {
  public:
    ScoreSheet(int teams, IntVec cells);

    int teams() const noexcept { return teams_; }
    const IntVec& cells() const noexcept { return cells_; }

    const Int& goals(int i, int j) const { return cells_[cell_index(teams_, i, j)]; }

    /// Full n-by-n grid with a zero diagonal.
    IntMat grid() const;

    bool operator==(const ScoreSheet& other) const;

  private:
    int teams_;
    IntVec cells_;
};

/// Validates an n-by-n grid (zero diagonal, nonnegative entries) and drops
/// the diagonal.
ScoreSheet make_sheet(int teams, const IntMat& entries);

/// Zero sheet: the monoid identity.
ScoreSheet zero_sheet(int teams);

ScoreSheet add_sheets(const ScoreSheet& a, const ScoreSheet& b);

/// Entrywise difference; throws NegativeEntry when b is not dominated by a.
ScoreSheet subtract_sheets(const ScoreSheet& a, const ScoreSheet& b);

/// Per-team scored-goal totals (g_1, ..., g_n).
GoalVector goal_vector(const ScoreSheet& s);

/// Grading deg S = g_1 + ... + g_n.
Int total_goals(const ScoreSheet& s);

/// Grading deg_1 S = g_1.
Int top_goals(const ScoreSheet& s);

/// True iff the goal vector is weakly decreasing.
bool is_ordered(const ScoreSheet& s);

/// The pattern vector p_i: i ones followed by n-i zeros.
GoalVector scoring_pattern(int teams, int scorers);

/// Simultaneously permutes rows and columns: new (i,j) cell reads the old
/// (perm[i], perm[j]) cell, with perm given 0-based.
ScoreSheet relabel(const ScoreSheet& s, const std::vector<int>& perm);

/// Permutation sorting teams by descending goals, ties kept in original
/// order; relabeling by it always yields an ordered sheet.
std::vector<int> ordering_permutation(const ScoreSheet& s);

ScoreSheet canonicalize(const ScoreSheet& s);

/// Membership in the ordered-sheet monoid: entries are nonnegative by
/// construction, so this is just the ordered predicate.
inline bool member_of_monoid(const ScoreSheet& s) { return is_ordered(s); }

bool lex_less_sheet(const ScoreSheet& a, const ScoreSheet& b);

}  // namespace tallycone

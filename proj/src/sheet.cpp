#include "tallycone/sheet.hpp"

#include <algorithm>
#include <numeric>

#include "tallycone/linalg.hpp"

namespace tallycone {

ScoreSheet::ScoreSheet(int teams, IntVec cells) : teams_(teams), cells_(std::move(cells)) {
    if (teams_ < 2) fail(Errc::BadDimension, "a score sheet needs at least 2 teams");
    if (cells_.size() != static_cast<Index>(teams_) * (teams_ - 1))
        fail(Errc::BadDimension, "cell vector must have length n(n-1)");
    for (Index k = 0; k < cells_.size(); ++k)
        if (cells_[k] < 0) fail(Errc::NegativeEntry, "goal counts must be nonnegative");
}

IntMat ScoreSheet::grid() const {
    IntMat g = IntMat::Zero(teams_, teams_);
    for (int i = 0; i < teams_; ++i)
        for (int j = 0; j < teams_; ++j)
            if (i != j) g(i, j) = goals(i, j);
    return g;
}

bool ScoreSheet::operator==(const ScoreSheet& other) const {
    return teams_ == other.teams_ &&
           std::equal(cells_.data(), cells_.data() + cells_.size(), other.cells_.data());
}

ScoreSheet make_sheet(int teams, const IntMat& entries) {
    if (teams < 2) fail(Errc::BadDimension, "a score sheet needs at least 2 teams");
    if (entries.rows() != teams || entries.cols() != teams)
        fail(Errc::BadDimension, "grid must be n-by-n");
    IntVec cells(static_cast<Index>(teams) * (teams - 1));
    for (int i = 0; i < teams; ++i) {
        if (entries(i, i) != 0) fail(Errc::NonzeroDiagonal, "diagonal entries must be 0");
        for (int j = 0; j < teams; ++j) {
            if (i == j) continue;
            if (entries(i, j) < 0) fail(Errc::NegativeEntry, "goal counts must be nonnegative");
            cells[cell_index(teams, i, j)] = entries(i, j);
        }
    }
    return ScoreSheet(teams, std::move(cells));
}

ScoreSheet zero_sheet(int teams) {
    if (teams < 2) fail(Errc::BadDimension, "a score sheet needs at least 2 teams");
    return ScoreSheet(teams, IntVec::Zero(static_cast<Index>(teams) * (teams - 1)));
}

ScoreSheet add_sheets(const ScoreSheet& a, const ScoreSheet& b) {
    if (a.teams() != b.teams()) fail(Errc::DimensionMismatch, "team counts differ");
    return ScoreSheet(a.teams(), a.cells() + b.cells());
}

ScoreSheet subtract_sheets(const ScoreSheet& a, const ScoreSheet& b) {
    if (a.teams() != b.teams()) fail(Errc::DimensionMismatch, "team counts differ");
    return ScoreSheet(a.teams(), a.cells() - b.cells());
}

GoalVector goal_vector(const ScoreSheet& s) {
    const int n = s.teams();
    GoalVector g = GoalVector::Zero(n);
    for (int i = 0; i < n; ++i) {
        Int row = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) row += s.goals(i, j);
        g[i] = row;
    }
    return g;
}

Int total_goals(const ScoreSheet& s) { return s.cells().sum(); }

Int top_goals(const ScoreSheet& s) {
    Int g1 = 0;
    for (int j = 1; j < s.teams(); ++j) g1 += s.goals(0, j);
    return g1;
}

bool is_ordered(const ScoreSheet& s) {
    GoalVector g = goal_vector(s);
    for (Index i = 1; i < g.size(); ++i)
        if (g[i - 1] < g[i]) return false;
    return true;
}

GoalVector scoring_pattern(int teams, int scorers) {
    if (teams < 2 || scorers < 0 || scorers > teams)
        fail(Errc::BadDimension, "scoring-team count must lie in 0..n");
    GoalVector p = GoalVector::Zero(teams);
    for (int i = 0; i < scorers; ++i) p[i] = 1;
    return p;
}

ScoreSheet relabel(const ScoreSheet& s, const std::vector<int>& perm) {
    const int n = s.teams();
    if (static_cast<int>(perm.size()) != n) fail(Errc::BadPermutation, "permutation length must be n");
    std::vector<bool> seen(n, false);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) fail(Errc::BadPermutation, "not a bijection on 0..n-1");
        seen[v] = true;
    }
    IntVec cells(s.cells().size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) cells[cell_index(n, i, j)] = s.goals(perm[i], perm[j]);
    return ScoreSheet(n, std::move(cells));
}

std::vector<int> ordering_permutation(const ScoreSheet& s) {
    GoalVector g = goal_vector(s);
    std::vector<int> perm(s.teams());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return g[a] > g[b]; });
    return perm;
}

ScoreSheet canonicalize(const ScoreSheet& s) { return relabel(s, ordering_permutation(s)); }

bool lex_less_sheet(const ScoreSheet& a, const ScoreSheet& b) {
    if (a.teams() != b.teams()) return a.teams() < b.teams();
    return lex_less(a.cells(), b.cells());
}

}  // namespace tallycone

#include "tallycone/basis.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>

#include "tallycone/linalg.hpp"
#include "tallycone/numeric.hpp"

namespace tallycone {

int hb_scorers(const ScoreSheet& s) {
    const int n = s.teams();
    int scorers = 0;
    bool done = false;
    for (int i = 0; i < n; ++i) {
        Int row = 0;
        Int biggest = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            row += s.goals(i, j);
            if (s.goals(i, j) > biggest) biggest = s.goals(i, j);
        }
        if (row == 0) {
            done = true;
        } else if (done || row != 1 || biggest != 1) {
            return -1;
        } else {
            ++scorers;
        }
    }
    return scorers == 0 ? -1 : scorers;
}

std::vector<HBElement> hilbert_basis(int teams) {
    if (teams < 2) fail(Errc::BadDimension, "need at least 2 teams");
    const Index cells = static_cast<Index>(teams) * (teams - 1);
    std::vector<HBElement> out;
    for (int scorers = 1; scorers <= teams; ++scorers) {
        std::vector<int> target(scorers, 0);
        // Mixed-radix walk over the n-1 possible target columns per row.
        for (int row = 0; row < scorers; ++row) target[row] = row == 0 ? 1 : 0;
        while (true) {
            IntVec v = IntVec::Zero(cells);
            for (int row = 0; row < scorers; ++row) v[cell_index(teams, row, target[row])] = 1;
            out.push_back({ScoreSheet(teams, std::move(v)), scorers});
            int row = scorers - 1;
            while (row >= 0) {
                ++target[row];
                if (target[row] == row) ++target[row];
                if (target[row] < teams) break;
                target[row] = row == 0 ? 1 : 0;
                --row;
            }
            if (row < 0) break;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const HBElement& a, const HBElement& b) { return lex_less_sheet(a.sheet, b.sheet); });
    return out;
}

Int hb_cardinality(int teams) {
    if (teams < 2) fail(Errc::BadDimension, "need at least 2 teams");
    Int sum = 0;
    Int power = 1;
    for (int i = 1; i <= teams; ++i) {
        power *= teams - 1;
        sum += power;
    }
    return sum;
}

Decomposition decompose(const ScoreSheet& s) {
    if (!is_ordered(s)) fail(Errc::NotOrdered, "decompose needs an ordered sheet");
    const int n = s.teams();
    IntVec cur = s.cells();
    GoalVector g = goal_vector(s);

    Decomposition result{s, {}};
    while (true) {
        int r = -1;
        for (int i = n - 1; i >= 0; --i)
            if (g[i] > 0) {
                r = i;
                break;
            }
        if (r < 0) break;
        IntVec part = IntVec::Zero(cur.size());
        for (int i = 0; i <= r; ++i) {
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                Index k = cell_index(n, i, j);
                if (cur[k] > 0) {
                    part[k] = 1;
                    cur[k] -= 1;
                    g[i] -= 1;
                    break;
                }
            }
        }
        result.parts.push_back({ScoreSheet(n, std::move(part)), r + 1});
    }
    return result;
}

namespace {

std::vector<std::int64_t> memo_key(const IntVec& cells) {
    std::vector<std::int64_t> key(cells.size());
    for (Index k = 0; k < cells.size(); ++k) key[k] = cells[k].convert_to<std::int64_t>();
    return key;
}

bool ordered_cells(int teams, const IntVec& cells) {
    Int prev = -1;
    for (int i = 0; i < teams; ++i) {
        Int row = 0;
        for (int j = 0; j < teams - 1; ++j) row += cells[static_cast<Index>(i) * (teams - 1) + j];
        if (i > 0 && prev < row) return false;
        prev = row;
    }
    return true;
}

bool search_decomposition(int teams, IntVec& cur, const std::vector<ScoreSheet>& candidate,
                          std::map<std::vector<std::int64_t>, bool>& memo, std::size_t budget) {
    if (cur.isZero()) return true;
    auto key = memo_key(cur);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    if (memo.size() >= budget) fail(Errc::BudgetExceeded, "decomposition search exceeded its node budget");
    memo.emplace(key, false);

    for (const ScoreSheet& c : candidate) {
        bool fits = true;
        for (Index k = 0; k < cur.size() && fits; ++k)
            if (c.cells()[k] > cur[k]) fits = false;
        if (!fits) continue;
        IntVec rest = cur - c.cells();
        if (!ordered_cells(teams, rest)) continue;
        if (search_decomposition(teams, rest, candidate, memo, budget)) {
            memo[key] = true;
            return true;
        }
    }
    return false;
}

void enumerate_cells(int teams, Index pos, Int left, IntVec& cells, std::vector<ScoreSheet>& out) {
    if (pos == cells.size() - 1) {
        cells[pos] = left;
        if (ordered_cells(teams, cells)) out.emplace_back(teams, cells);
        return;
    }
    for (Int v = 0; v <= left; ++v) {
        cells[pos] = v;
        enumerate_cells(teams, pos + 1, left - v, cells, out);
    }
    cells[pos] = 0;
}

}  // namespace

bool decomposes_over(const ScoreSheet& s, const std::vector<ScoreSheet>& candidate,
                     std::size_t node_budget) {
    if (!is_ordered(s)) fail(Errc::NotOrdered, "only ordered sheets are monoid members");
    IntVec cur = s.cells();
    std::map<std::vector<std::int64_t>, bool> memo;
    return search_decomposition(s.teams(), cur, candidate, memo, node_budget);
}

std::vector<ScoreSheet> enumerate_ordered_sheets(int teams, int total) {
    if (teams < 2 || total < 0) fail(Errc::BadDimension, "need n >= 2 and total >= 0");
    IntVec cells = IntVec::Zero(static_cast<Index>(teams) * (teams - 1));
    std::vector<ScoreSheet> out;
    enumerate_cells(teams, 0, total, cells, out);
    return out;
}

std::vector<ScoreSheet> sample_ordered_sheets(int teams, int count, int max_total,
                                              std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const Index cells = static_cast<Index>(teams) * (teams - 1);
    std::vector<ScoreSheet> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        IntVec v = IntVec::Zero(cells);
        auto total = rng() % (static_cast<std::uint64_t>(max_total) + 1);
        for (std::uint64_t t = 0; t < total; ++t) v[static_cast<Index>(rng() % cells)] += 1;
        out.push_back(canonicalize(ScoreSheet(teams, std::move(v))));
    }
    return out;
}

VerificationReport verify_hilbert_basis(int teams, const std::vector<ScoreSheet>& candidate,
                                        std::uint64_t seed) {
    if (candidate.empty()) fail(Errc::EmptyInput, "candidate set is empty");
    for (const ScoreSheet& c : candidate) {
        if (c.teams() != teams) fail(Errc::DimensionMismatch, "candidate team count differs");
        if (c.cells().isZero()) fail(Errc::ContainsZero, "candidate contains the zero sheet");
        if (!is_ordered(c)) fail(Errc::NotOrdered, "candidate contains a non-member sheet");
    }

    VerificationReport report;

    std::vector<ScoreSheet> sample;
    for (int total = 0; total <= 4; ++total) {
        auto batch = enumerate_ordered_sheets(teams, total);
        sample.insert(sample.end(), batch.begin(), batch.end());
    }
    auto random_batch = sample_ordered_sheets(teams, 1000, 20, seed);
    sample.insert(sample.end(), random_batch.begin(), random_batch.end());

    for (const ScoreSheet& s : sample) {
        ++report.sheets_checked;
        if (!decomposes_over(s, candidate)) report.generation_failures.push_back(s);
    }

    const Index m = static_cast<Index>(candidate.size());
    for (Index i = 0; i < m; ++i) {
        for (Index j = 0; j < m; ++j) {
            if (i == j) continue;
            ++report.pairs_checked;
            IntVec diff = candidate[i].cells() - candidate[j].cells();
            bool nonneg = true;
            for (Index k = 0; k < diff.size() && nonneg; ++k)
                if (diff[k] < 0) nonneg = false;
            if (nonneg && ordered_cells(teams, diff))
                report.irreducibility_failures.emplace_back(i, j);
        }
    }
    return report;
}

}  // namespace tallycone

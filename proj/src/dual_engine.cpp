#include "tallycone/dual_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <tuple>

#include "tallycone/error.hpp"
#include "tallycone/linalg.hpp"
#include "tallycone/sheet.hpp"

namespace tallycone {

ConeSystem cone_system(int teams) {
    if (teams < 2) fail(Errc::BadDimension, "need n >= 2");
    const int n = teams;
    ConeSystem sys;
    sys.teams = n;
    sys.dim = static_cast<Index>(n) * (n - 1);
    for (int i = 0; i + 1 < n; ++i) {
        IntVec form = IntVec::Zero(sys.dim);
        for (int j = 0; j < n; ++j) {
            if (j != i) form[cell_index(n, i, j)] += 1;
            if (j != i + 1) form[cell_index(n, i + 1, j)] -= 1;
        }
        sys.forms.push_back(std::move(form));
    }
    return sys;
}

namespace {

struct Element {
    IntVec v;
    Int sig;
    std::int64_t deg;
};

std::int64_t degree_of(const IntVec& v) {
    Int d = 0;
    for (Index k = 0; k < v.size(); ++k) d += v[k];
    return d.convert_to<std::int64_t>();
}

bool in_monoid(const IntVec& v, const std::vector<const IntVec*>& closed_forms) {
    for (Index k = 0; k < v.size(); ++k)
        if (v[k] < 0) return false;
    for (const IntVec* f : closed_forms)
        if (f->dot(v) < 0) return false;
    return true;
}

/// Discard criterion for a candidate z while closing under the form with
/// values sig: an element c with z - c in the previous monoid and sig(c)
/// between 0 and sig(z) (on z's side of the hyperplane) makes z redundant.
bool reduces(const Element& c, const IntVec& z, const Int& zsig,
             const std::vector<const IntVec*>& prev_forms) {
    if (zsig >= 0) {
        if (c.sig < 0 || c.sig > zsig) return false;
    } else {
        if (c.sig > 0 || c.sig < zsig) return false;
    }
    return in_monoid(z - c.v, prev_forms);
}

std::vector<IntVec> minimize(std::vector<IntVec> gens,
                             const std::vector<const IntVec*>& closed_forms) {
    std::sort(gens.begin(), gens.end(), [](const IntVec& a, const IntVec& b) {
        const std::int64_t da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return lex_less(a, b);
    });
    std::vector<IntVec> kept;
    for (const IntVec& g : gens) {
        bool reducible = false;
        for (const IntVec& k : kept) {
            IntVec diff = g - k;
            if (diff.isZero()) continue;
            if (in_monoid(diff, closed_forms)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) kept.push_back(g);
    }
    return kept;
}

}  // namespace

CompletionTrace hilbert_basis_completion_trace(const ConeSystem& sys,
                                               const CompletionOptions& opts) {
    if (sys.teams < 2) fail(Errc::BadDimension, "need n >= 2");
    if (sys.teams > 5 || (sys.teams == 5 && !opts.long_run))
        fail(Errc::DimensionTooLarge,
             sys.teams > 5 ? "completion is capped at n <= 5"
                           : "n = 5 completion is expensive; rerun with the long-run flag");

    CompletionTrace trace;
    trace.system = sys;

    std::vector<IntVec> gens;
    for (Index k = 0; k < sys.dim; ++k) {
        IntVec unit = IntVec::Zero(sys.dim);
        unit[k] = 1;
        gens.push_back(std::move(unit));
    }

    std::vector<const IntVec*> prev_forms;
    for (Index fi = 0; fi < static_cast<Index>(sys.forms.size()); ++fi) {
        const IntVec& form = sys.forms[fi];

        std::vector<Element> members;
        members.reserve(gens.size());
        for (const IntVec& g : gens) members.push_back({g, form.dot(g), degree_of(g)});

        // Min-heap of candidate sums x + y with sig(x) > 0 > sig(y),
        // processed in degree order; ties broken by insertion sequence.
        using Entry = std::tuple<std::int64_t, std::uint64_t, Index, Index>;
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue;
        std::uint64_t seq = 0;
        auto push_pair = [&](Index i, Index j) {
            queue.emplace(members[i].deg + members[j].deg, seq++, i, j);
        };
        for (Index i = 0; i < static_cast<Index>(members.size()); ++i)
            for (Index j = 0; j < static_cast<Index>(members.size()); ++j)
                if (members[i].sig > 0 && members[j].sig < 0) push_pair(i, j);

        while (!queue.empty()) {
            const auto [deg, tie, i, j] = queue.top();
            queue.pop();
            IntVec z = members[i].v + members[j].v;
            Int zsig = members[i].sig + members[j].sig;
            bool redundant = false;
            for (const Element& c : members)
                if (reduces(c, z, zsig, prev_forms)) {
                    redundant = true;
                    break;
                }
            if (redundant) continue;
            if (members.size() >= opts.element_cap)
                fail(Errc::BudgetExceeded, "completion working set exceeded " +
                                               std::to_string(opts.element_cap) + " elements");
            const Index m = static_cast<Index>(members.size());
            members.push_back({std::move(z), zsig, deg});
            for (Index k = 0; k < m; ++k) {
                if (zsig > 0 && members[k].sig < 0) push_pair(m, k);
                if (zsig < 0 && members[k].sig > 0) push_pair(k, m);
            }
        }

        prev_forms.push_back(&form);
        std::vector<IntVec> kept;
        for (const Element& c : members)
            if (c.sig >= 0) kept.push_back(c.v);
        gens = minimize(std::move(kept), prev_forms);

        std::vector<IntVec> snapshot = gens;
        std::sort(snapshot.begin(), snapshot.end(),
                  [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
        trace.stages.push_back({fi, std::move(snapshot)});
    }
    return trace;
}

std::vector<IntVec> hilbert_basis_completion(const ConeSystem& sys,
                                             const CompletionOptions& opts) {
    return hilbert_basis_completion_trace(sys, opts).final_basis();
}

}  // namespace tallycone

#include "tallycone/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tallycone/basis.hpp"
#include "tallycone/error.hpp"
#include "tallycone/linalg.hpp"

namespace tallycone {

FacetSystem facet_system(int teams) {
    if (teams < 2) fail(Errc::BadDimension, "need n >= 2");
    const int n = teams;
    const Index dim = static_cast<Index>(n) * (n - 1);
    FacetSystem sys;
    sys.teams = n;
    sys.dim = dim;

    auto row_sum_coeffs = [&](int i) {
        IntVec c = IntVec::Zero(dim);
        for (int j = 0; j < n; ++j)
            if (j != i) c[cell_index(n, i, j)] = 1;
        return c;
    };

    sys.rows.push_back({row_sum_coeffs(0), Relation::Eq});
    for (int i = 1; i < n; ++i) {
        IntVec diff = row_sum_coeffs(i - 1) - row_sum_coeffs(i);
        sys.rows.push_back({diff, Relation::Ge0});
        sys.rows.push_back({std::move(diff), Relation::Le1});
    }
    for (Index k = 0; k < dim; ++k) {
        IntVec unit = IntVec::Zero(dim);
        unit[k] = 1;
        sys.rows.push_back({unit, Relation::Ge0});
        sys.rows.push_back({std::move(unit), Relation::Le1});
    }
    return sys;
}

bool satisfies(const FacetSystem& sys, const IntVec& point) {
    if (point.size() != sys.dim) fail(Errc::DimensionMismatch, "point has wrong dimension");
    for (const auto& row : sys.rows) {
        const Int v = row.coeffs.dot(point);
        switch (row.rel) {
            case Relation::Eq:
                if (v != 1) return false;
                break;
            case Relation::Ge0:
                if (v < 0) return false;
                break;
            case Relation::Le1:
                if (v > 1) return false;
                break;
        }
    }
    return true;
}

bool constraint_tight(const ConstraintRow& row, const IntVec& point) {
    const Int v = row.coeffs.dot(point);
    switch (row.rel) {
        case Relation::Eq: return v == 1;
        case Relation::Ge0: return v == 0;
        case Relation::Le1: return v == 1;
    }
    return false;
}

VertexReport verify_vertices(int teams, int max_teams) {
    if (teams < 2) fail(Errc::BadDimension, "need n >= 2");
    if (teams > max_teams)
        fail(Errc::DimensionTooLarge, "vertex scan is capped at n <= " + std::to_string(max_teams));

    const FacetSystem sys = facet_system(teams);
    const Index dim = sys.dim;
    const auto basis = hilbert_basis(teams);

    VertexReport report;
    report.candidates = static_cast<Index>(basis.size());

    for (Index b = 0; b < report.candidates; ++b) {
        const IntVec& v = basis[b].sheet.cells();
        std::vector<Index> tight;
        for (Index r = 0; r < static_cast<Index>(sys.rows.size()); ++r)
            if (constraint_tight(sys.rows[r], v)) tight.push_back(r);
        RatMat normals(static_cast<Index>(tight.size()), dim);
        for (Index t = 0; t < static_cast<Index>(tight.size()); ++t)
            normals.row(t) = sys.rows[tight[t]].coeffs.cast<Rat>().transpose();
        if (exact_rank(normals) != dim) report.not_vertex.push_back(b);
    }

    // Box constraints force 0/1 cells, so the full lattice is a bitmask scan.
    std::set<std::vector<char>> basis_keys;
    for (const auto& e : basis) {
        std::vector<char> key(dim);
        for (Index k = 0; k < dim; ++k) key[k] = e.sheet.cells()[k] == 1 ? 1 : 0;
        basis_keys.insert(std::move(key));
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dim); ++mask) {
        ++report.lattice_points_scanned;
        IntVec p(dim);
        std::vector<char> key(dim);
        for (Index k = 0; k < dim; ++k) {
            const int bit = (mask >> k) & 1;
            p[k] = bit;
            key[k] = static_cast<char>(bit);
        }
        if (!satisfies(sys, p)) continue;
        if (!basis_keys.count(key)) report.extra_points.push_back(std::move(p));
    }
    return report;
}

Int simplex_volume(const IntMat& points) {
    const Index dim = points.cols();
    const Index m = points.rows();
    if (m != dim) fail(Errc::BadDimension, "a full-dimensional slice simplex needs dim+1 points");
    // Recover n from dim = n(n-1); the first n-1 coordinates are team 1's row.
    int n = 2;
    while (static_cast<Index>(n) * (n - 1) < dim) ++n;
    if (static_cast<Index>(n) * (n - 1) != dim) fail(Errc::BadDimension, "not a sheet lattice");
    const int row1 = n - 1;

    // Edge vectors lie in the slice lattice (first-row sums cancel); in the
    // basis {e_j - e_0 : 0 < j < n-1} + {e_k : k >= n-1} their coordinates
    // are simply all but the first.
    IntMat edges(m - 1, dim - 1);
    for (Index i = 1; i < m; ++i) {
        IntVec e = (points.row(i) - points.row(0)).transpose();
        Int row1_sum = 0;
        for (int k = 0; k < row1; ++k) row1_sum += e[k];
        if (row1_sum != 0) fail(Errc::BadDimension, "points do not share the top-goal degree");
        edges.row(i - 1) = e.tail(dim - 1).transpose();
    }
    Int det = exact_det(edges);
    if (det == 0) fail(Errc::DegenerateSimplex, "points are affinely dependent");
    return abs(det);
}

namespace {

struct Puller {
    const std::vector<IntVec>& verts;
    std::vector<const ConstraintRow*> forms;
    std::map<std::vector<Index>, std::vector<std::vector<Index>>> memo;

    Index face_dim(const std::vector<Index>& face) const {
        RatMat pts(static_cast<Index>(face.size()), verts[0].size());
        for (Index i = 0; i < static_cast<Index>(face.size()); ++i)
            pts.row(i) = verts[face[i]].cast<Rat>().transpose();
        return affine_rank(pts);
    }

    const std::vector<std::vector<Index>>& pull(const std::vector<Index>& face) {
        auto it = memo.find(face);
        if (it != memo.end()) return it->second;

        std::vector<std::vector<Index>> simplices;
        const Index fdim = face_dim(face);
        if (static_cast<Index>(face.size()) == fdim + 1) {
            simplices.push_back(face);
            return memo.emplace(face, std::move(simplices)).first->second;
        }

        const Index pulled = face.front();
        std::set<std::vector<Index>> seen;
        for (const ConstraintRow* h : forms) {
            std::vector<Index> facet;
            bool has_pulled = false;
            for (Index v : face)
                if (constraint_tight(*h, verts[v])) {
                    facet.push_back(v);
                    if (v == pulled) has_pulled = true;
                }
            if (has_pulled || facet.empty() || facet.size() == face.size()) continue;
            if (!seen.insert(facet).second) continue;
            if (face_dim(facet) != fdim - 1) continue;
            for (const auto& s : pull(facet)) {
                std::vector<Index> cone;
                cone.reserve(s.size() + 1);
                cone.push_back(pulled);
                cone.insert(cone.end(), s.begin(), s.end());
                std::sort(cone.begin(), cone.end());
                simplices.push_back(std::move(cone));
            }
        }
        return memo.emplace(face, std::move(simplices)).first->second;
    }
};

}  // namespace

Triangulation pulling_triangulation(int teams, bool long_run) {
    if (teams < 2) fail(Errc::BadDimension, "need n >= 2");
    if (teams > 4 || (teams == 4 && !long_run))
        fail(Errc::DimensionTooLarge, teams > 4
                                          ? "triangulation is capped at n <= 4"
                                          : "n = 4 is minutes-scale; rerun with the long-run flag");

    const FacetSystem sys = facet_system(teams);
    const auto basis = hilbert_basis(teams);

    Triangulation tri;
    tri.teams = teams;
    tri.dim = sys.dim;
    std::vector<IntVec> verts;
    verts.reserve(basis.size());
    for (const auto& e : basis) {
        tri.points.push_back(e.sheet);
        verts.push_back(e.sheet.cells());
    }

    Puller puller{verts, {}, {}};
    for (const auto& row : sys.rows)
        if (row.rel != Relation::Eq) puller.forms.push_back(&row);

    std::vector<Index> all(verts.size());
    for (Index i = 0; i < static_cast<Index>(verts.size()); ++i) all[i] = i;

    for (const auto& s : puller.pull(all)) {
        IntMat pts(static_cast<Index>(s.size()), sys.dim);
        for (Index i = 0; i < static_cast<Index>(s.size()); ++i)
            pts.row(i) = verts[s[i]].transpose();
        Int vol = simplex_volume(pts);
        tri.total_volume += vol;
        tri.simplices.push_back({s, std::move(vol)});
    }
    return tri;
}

}  // namespace tallycone

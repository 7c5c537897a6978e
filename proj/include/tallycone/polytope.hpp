#pragma once

#include <vector>

#include "tallycone/sheet.hpp"
#include "tallycone/types.hpp"

namespace tallycone {

/// Constraint row: coeffs . x == 1 (Eq), >= 0 (Ge0) or <= 1 (Le1).
enum class Relation { Eq, Ge0, Le1 };

struct ConstraintRow {
    IntVec coeffs;
    Relation rel;
};

/// The degree-1 cross-section polytope of the ordered-sheet cone: g_1 = 1,
/// 0 <= g_{i-1} - g_i <= 1 for i = 2..n, 0 <= g_ij <= 1 per cell.
struct FacetSystem {
    int teams = 0;
    Index dim = 0;
    std::vector<ConstraintRow> rows;
};

FacetSystem facet_system(int teams);

bool satisfies(const FacetSystem& sys, const IntVec& point);

bool constraint_tight(const ConstraintRow& row, const IntVec& point);

struct VertexReport {
    Index candidates = 0;
    Index lattice_points_scanned = 0;
    /// Basis elements whose tight constraints do not pin them down.
    std::vector<Index> not_vertex;
    /// Polytope lattice points outside the basis (there should be none).
    std::vector<IntVec> extra_points;

    bool passed() const { return not_vertex.empty() && extra_points.empty(); }
};

/// Confirms that the Hilbert basis elements are exactly the vertices of the
/// polytope: each has a tight constraint set of full rank, and the complete
/// 0/1 lattice scan finds no further polytope point.
VertexReport verify_vertices(int teams, int max_teams = 4);

/// Normalized volume of a full-dimensional lattice simplex in the g_1 = c
/// slice: |det| of the edge vectors written in a lattice basis of the slice
/// direction space. Rows of points are the dim+1 vertices.
Int simplex_volume(const IntMat& points);

struct TriangulationSimplex {
    std::vector<Index> vertices;
    Int volume;
};

struct Triangulation {
    int teams = 0;
    Index dim = 0;
    std::vector<ScoreSheet> points;
    std::vector<TriangulationSimplex> simplices;
    Int total_volume = 0;
};

/// Pulling triangulation: recursively cones the lexicographically smallest
/// vertex of each face over the face's facets that avoid it. n = 4 is
/// minutes-scale and sits behind the long-run flag.
Triangulation pulling_triangulation(int teams, bool long_run = false);

}  // namespace tallycone

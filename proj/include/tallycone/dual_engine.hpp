#pragma once

#include <cstddef>
#include <vector>

#include "tallycone/types.hpp"

namespace tallycone {

/// Homogeneous facet description of the ordered-sheet cone: coordinate
/// nonnegativity (implicit) plus the n-1 ordering forms g_i - g_{i+1} >= 0.
struct ConeSystem {
    int teams = 0;
    Index dim = 0;
    std::vector<IntVec> forms;
};

ConeSystem cone_system(int teams);

struct CompletionOptions {
    /// Abort once the working set outgrows this many elements.
    std::size_t element_cap = 1'000'000;
    bool long_run = false;
};

/// Minimal generating set after intersecting the first (form index + 1)
/// halfspaces with the free monoid.
struct CompletionStage {
    Index form = 0;
    std::vector<IntVec> basis;
};

struct CompletionTrace {
    ConeSystem system;
    std::vector<CompletionStage> stages;

    const std::vector<IntVec>& final_basis() const { return stages.back().basis; }
};

/// Completion-style dual computation of the Hilbert basis, independent of
/// the constructive enumeration. Starting from the unit vectors, halfspaces
/// are applied one at a time: sums of elements straddling the new form are
/// adjoined in degree order unless an existing element already reduces them,
/// then the surviving nonnegative side is minimized.
CompletionTrace hilbert_basis_completion_trace(const ConeSystem& sys,
                                               const CompletionOptions& opts = {});

/// Final basis only, sorted lexicographically.
std::vector<IntVec> hilbert_basis_completion(const ConeSystem& sys,
                                             const CompletionOptions& opts = {});

}  // namespace tallycone

#pragma once

#include <algorithm>

#include "tallycone/error.hpp"
#include "tallycone/types.hpp"

namespace tallycone {

template <typename Scalar>
bool lex_less(const VecX<Scalar>& a, const VecX<Scalar>& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
}

/// Rank over the rationals via full-pivot elimination; exact.
inline Index exact_rank(const RatMat& m) {
    if (m.size() == 0) return 0;
    return Eigen::FullPivLU<RatMat>(m).rank();
}

inline Rat exact_det(const RatMat& m) {
    if (m.rows() != m.cols()) fail(Errc::BadDimension, "determinant needs a square matrix");
    if (m.rows() == 0) return 1;
    return Eigen::FullPivLU<RatMat>(m).determinant();
}

inline Int exact_det(const IntMat& m) {
    Rat d = exact_det(m.cast<Rat>());
    return numerator(d) / denominator(d);
}

/// Solves A x = b exactly; A must be square and invertible.
inline RatVec exact_solve(const RatMat& a, const RatVec& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        fail(Errc::BadDimension, "solve needs a square system");
    Eigen::FullPivLU<RatMat> lu(a);
    if (lu.rank() != a.rows()) fail(Errc::SingularSystem, "singular linear system");
    return lu.solve(b);
}

/// Rank of the affine span of a point set (rows = points).
inline Index affine_rank(const RatMat& points) {
    if (points.rows() <= 1) return 0;
    RatMat diffs(points.rows() - 1, points.cols());
    for (Index i = 1; i < points.rows(); ++i) diffs.row(i - 1) = points.row(i) - points.row(0);
    return exact_rank(diffs);
}

}  // namespace tallycone

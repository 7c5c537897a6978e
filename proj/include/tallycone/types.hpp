#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace tallycone {

/// Arbitrary-precision signed integer.
using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always kept in lowest terms.
using Rat = boost::multiprecision::mpq_rational;

using Index = Eigen::Index;

template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVec = VecX<Int>;
using IntMat = MatX<Int>;
using RatVec = VecX<Rat>;
using RatMat = MatX<Rat>;

/// Per-team goal totals, ordered weakly decreasing for valid sheets.
using GoalVector = IntVec;

}  // namespace tallycone

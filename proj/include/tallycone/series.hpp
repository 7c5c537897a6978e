#pragma once

#include <vector>

#include "tallycone/counting.hpp"
#include "tallycone/types.hpp"

namespace tallycone {

/// Rational generating function: numerator coefficients over the product of
/// factors (1 - t^d), one factor per denominator exponent.
struct SeriesRep {
    std::vector<Int> numerator;
    std::vector<int> denominator;
};

/// Denominator exponent multiset used for each n; known-good factored forms
/// for n = 3..7, otherwise lcm(1..n) repeated n^2-n times.
std::vector<int> default_denominator(int teams);

/// Recovers the numerator by multiplying the count series with every
/// denominator factor. Counts must cover degrees 0..sum(denominator); all
/// products beyond that index must cancel to zero, which witnesses that the
/// series really is rational with the given denominator.
std::vector<Int> numerator_from_counts(const CountTable& counts,
                                       const std::vector<int>& denominator);

/// First k numerator coefficients only; counts need merely cover 0..k-1.
std::vector<Int> numerator_prefix(const CountTable& counts, const std::vector<int>& denominator,
                                  int k);

/// First k coefficients of the Laurent expansion of the rational function.
std::vector<Int> expand_series(const SeriesRep& rep, int k);

/// Full series for the ordered-sheet monoid. The n = 7 numerator needs
/// counts up to degree 10163 and sits behind the long-run flag.
SeriesRep hilbert_series(int teams, bool long_run = false);

}  // namespace tallycone

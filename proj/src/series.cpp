#include "tallycone/series.hpp"

#include <algorithm>
#include <numeric>

#include "tallycone/error.hpp"
#include "tallycone/numeric.hpp"

namespace tallycone {

std::vector<int> default_denominator(int teams) {
    if (teams < 2) fail(Errc::BadDimension, "need n >= 2");
    auto repeat = [](std::vector<int>& v, int d, int m) { v.insert(v.end(), m, d); };
    std::vector<int> denom;
    switch (teams) {
        case 3:
            denom = {1, 1, 3, 6, 6, 6};
            break;
        case 4:
            denom = {1, 1, 2, 4, 4};
            repeat(denom, 12, 7);
            break;
        case 5:
            repeat(denom, 1, 4);
            repeat(denom, 5, 2);
            repeat(denom, 10, 1);
            repeat(denom, 20, 3);
            repeat(denom, 60, 10);
            break;
        case 6:
            repeat(denom, 1, 3);
            repeat(denom, 2, 1);
            repeat(denom, 6, 5);
            repeat(denom, 30, 4);
            repeat(denom, 60, 17);
            break;
        case 7:
            repeat(denom, 1, 6);
            repeat(denom, 7, 3);
            repeat(denom, 14, 1);
            repeat(denom, 42, 6);
            repeat(denom, 210, 5);
            repeat(denom, 420, 21);
            break;
        default:
            repeat(denom, static_cast<int>(lcm_upto(teams)), teams * teams - teams);
            break;
    }
    return denom;
}

namespace {

std::int64_t exponent_sum(const std::vector<int>& denominator) {
    std::int64_t sum = 0;
    for (int d : denominator) {
        if (d < 1) fail(Errc::BadDimension, "denominator exponents must be positive");
        sum += d;
    }
    return sum;
}

}  // namespace

std::vector<Int> numerator_from_counts(const CountTable& counts,
                                       const std::vector<int>& denominator) {
    const std::int64_t bound = exponent_sum(denominator);
    const std::int64_t have = static_cast<std::int64_t>(counts.values.size()) - 1;
    if (have < bound)
        fail(Errc::BadDimension, "counts must cover degrees 0.." + std::to_string(bound));

    std::vector<Int> c;
    c.reserve(counts.values.size());
    for (const auto& [g, value] : counts.values) c.push_back(value);
    for (int d : denominator)
        for (std::int64_t i = have; i >= d; --i) c[i] -= c[i - d];

    for (std::int64_t i = bound + 1; i <= have; ++i)
        if (!c[i].is_zero())
            fail(Errc::NonTerminating, "nonzero residual at degree " + std::to_string(i) +
                                           "; wrong denominator or insufficient counts");

    std::int64_t degree = std::min(bound, have);
    while (degree > 0 && c[degree].is_zero()) --degree;
    c.resize(degree + 1);
    return c;
}

std::vector<Int> numerator_prefix(const CountTable& counts, const std::vector<int>& denominator,
                                  int k) {
    if (k < 1) fail(Errc::BadDimension, "prefix length must be positive");
    if (static_cast<std::int64_t>(counts.values.size()) < k)
        fail(Errc::BadDimension, "counts must cover degrees 0.." + std::to_string(k - 1));
    std::vector<Int> c;
    c.reserve(k);
    for (int i = 0; i < k; ++i) c.push_back(counts.values[i].second);
    for (int d : denominator)
        for (int i = k - 1; i >= d; --i) c[i] -= c[i - d];
    return c;
}

std::vector<Int> expand_series(const SeriesRep& rep, int k) {
    if (k < 1) fail(Errc::BadDimension, "expansion length must be positive");
    std::vector<Int> c(k, Int(0));
    for (std::size_t i = 0; i < rep.numerator.size() && i < static_cast<std::size_t>(k); ++i)
        c[i] = rep.numerator[i];
    for (int d : rep.denominator) {
        if (d < 1) fail(Errc::BadDimension, "denominator exponents must be positive");
        for (int i = d; i < k; ++i) c[i] += c[i - d];
    }
    return c;
}

SeriesRep hilbert_series(int teams, bool long_run) {
    std::vector<int> denom = default_denominator(teams);
    const std::int64_t bound = exponent_sum(denom);
    if (bound > 2000 && !long_run)
        fail(Errc::DimensionTooLarge,
             "full numerator needs counts to degree " + std::to_string(bound) +
                 "; rerun with the long-run flag");
    CountTable counts = count_ordered_table(teams, bound + 8);
    return {numerator_from_counts(counts, denom), std::move(denom)};
}

}  // namespace tallycone

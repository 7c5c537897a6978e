#include "tallycone/counting.hpp"

#include <atomic>
#include <thread>

#include "tallycone/error.hpp"
#include "tallycone/linalg.hpp"
#include "tallycone/numeric.hpp"
#include "tallycone/sheet.hpp"

namespace tallycone {

Rat Quasipolynomial::evaluate(std::int64_t g) const {
    if (g < 0) fail(Errc::BadDimension, "negative degree");
    const auto& row = classes[static_cast<std::size_t>(g % period)];
    Rat acc = 0;
    Rat x = Int(g);
    for (auto it = row.rbegin(); it != row.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CountTable count_ordered_table(int teams, std::int64_t max_total) {
    if (teams < 2 || max_total < 0) fail(Errc::BadDimension, "need n >= 2 and G >= 0");
    const int n = teams;
    const std::int64_t gmax = max_total;

    // dp[k][s]: weighted partitions of s into exactly k parts, each part g
    // weighted by C(g+n-2, n-2); parts bounded by the outer loop variable.
    std::vector<std::vector<Int>> dp(n + 1, std::vector<Int>(gmax + 1, Int(0)));
    dp[0][0] = 1;
    for (std::int64_t p = 1; p <= gmax; ++p) {
        const Int w = binomial(p + n - 2, n - 2);
        for (int k = 1; k <= n; ++k) {
            const auto& prev = dp[k - 1];
            auto& cur = dp[k];
            for (std::int64_t s = p; s <= gmax; ++s)
                if (!prev[s - p].is_zero()) cur[s] += w * prev[s - p];
        }
    }

    CountTable table;
    table.teams = n;
    table.values.reserve(gmax + 1);
    for (std::int64_t g = 0; g <= gmax; ++g) {
        Int total = 0;
        for (int k = 0; k <= n; ++k) total += dp[k][g];
        table.values.emplace_back(g, std::move(total));
    }
    return table;
}

Int count_ordered(int teams, std::int64_t total) {
    return count_ordered_table(teams, total).values.back().second;
}

namespace {

void brute_count(int teams, int row, int col, Int left, Int prev_row, Int cur_row, Int& acc) {
    if (col == teams - 1) {
        if (cur_row > prev_row) return;
        if (row == teams - 1) {
            if (left == 0) ++acc;
            return;
        }
        brute_count(teams, row + 1, 0, left, cur_row, 0, acc);
        return;
    }
    for (Int v = 0; v <= left; ++v)
        brute_count(teams, row, col + 1, left - v, prev_row, cur_row + v, acc);
}

}  // namespace

Int count_ordered_bruteforce(int teams, std::int64_t total) {
    if (teams < 2 || total < 0) fail(Errc::BadDimension, "need n >= 2 and G >= 0");
    if (teams > 5 || total > 8) fail(Errc::TooLarge, "brute force is capped at n <= 5, G <= 8");
    Int acc = 0;
    brute_count(teams, 0, 0, Int(total), Int(total), 0, acc);
    return acc;
}

Int count_unordered(int teams, std::int64_t total) {
    if (teams < 2 || total < 0) fail(Errc::BadDimension, "need n >= 2 and G >= 0");
    const std::int64_t cells = static_cast<std::int64_t>(teams) * (teams - 1);
    return binomial(cells + total - 1, total);
}

Int count_unordered_cumulative(int teams, std::int64_t total) {
    if (teams < 2 || total < 0) fail(Errc::BadDimension, "need n >= 2 and G >= 0");
    const std::int64_t cells = static_cast<std::int64_t>(teams) * (teams - 1);
    return binomial(cells + total, total);
}

namespace detail {

Quasipolynomial fit_from_table(int teams, std::int64_t period, const CountTable& table,
                               int threads) {
    const int d = teams * teams - teams;
    if (static_cast<std::int64_t>(table.values.size()) < 2 * d * period)
        fail(Errc::BadDimension, "count table too short for the requested period");

    Quasipolynomial q;
    q.period = period;
    q.degree = d - 1;
    q.classes.assign(period, {});

    std::atomic<std::int64_t> bad_class{-1};
    auto fit_class = [&](std::int64_t c) {
        RatMat v(d, d);
        RatVec rhs(d);
        for (int t = 0; t < d; ++t) {
            const Int g = c + static_cast<std::int64_t>(t) * period;
            Rat x = 1;
            for (int l = 0; l < d; ++l) {
                v(t, l) = x;
                x *= g;
            }
            rhs[t] = table.values[static_cast<std::size_t>(c + t * period)].second;
        }
        RatVec coeff = exact_solve(v, rhs);
        q.classes[c].assign(coeff.data(), coeff.data() + d);
        for (int t = d; t < 2 * d; ++t) {
            const std::int64_t g = c + static_cast<std::int64_t>(t) * period;
            Rat value = 0;
            Rat x = Int(g);
            for (auto it = q.classes[c].rbegin(); it != q.classes[c].rend(); ++it)
                value = value * x + *it;
            if (value != Rat(table.values[static_cast<std::size_t>(g)].second)) {
                bad_class.store(c);
                break;
            }
        }
    };

    if (threads <= 1 || period == 1) {
        for (std::int64_t c = 0; c < period; ++c) fit_class(c);
    } else {
        const int workers = static_cast<int>(std::min<std::int64_t>(threads, period));
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::int64_t c = w; c < period; c += workers) fit_class(c);
            });
        for (auto& t : pool) t.join();
    }

    if (bad_class.load() >= 0)
        fail(Errc::PeriodTooSmall,
             "validation points diverge from the fit in residue class " +
                 std::to_string(bad_class.load()) + "; the assumed period is too small");
    return q;
}

}  // namespace detail

Quasipolynomial fit_quasipolynomial(int teams, std::int64_t period, int threads) {
    if (teams < 2 || period < 1) fail(Errc::BadDimension, "need n >= 2 and period >= 1");
    const int d = teams * teams - teams;
    CountTable table = count_ordered_table(teams, 2 * static_cast<std::int64_t>(d) * period - 1);
    return detail::fit_from_table(teams, period, table, threads);
}

std::int64_t minimal_period(int teams, int max_teams, int threads) {
    if (teams < 2) fail(Errc::BadDimension, "need n >= 2");
    if (teams > max_teams) fail(Errc::DimensionTooLarge, "period search is capped at n <= " +
                                                             std::to_string(max_teams));
    const int d = teams * teams - teams;
    const std::int64_t l = lcm_upto(teams);
    CountTable table = count_ordered_table(teams, 2 * static_cast<std::int64_t>(d) * l - 1);
    for (std::int64_t p : sorted_divisors(l)) {
        try {
            detail::fit_from_table(teams, p, table, threads);
            return p;
        } catch (const Error& e) {
            if (e.code() != Errc::PeriodTooSmall) throw;
        }
    }
    fail(Errc::PeriodTooSmall, "no divisor of lcm(1..n) validated");
}

Rat multiplicity_of(int teams, int threads) {
    // Any valid period yields the shared leading coefficient, so fit at
    // lcm(1..n) directly rather than searching for the minimal one.
    const int d = teams * teams - teams;
    Quasipolynomial q = fit_quasipolynomial(teams, lcm_upto(teams), threads);
    return q.leading_coefficient() * Rat(factorial(d - 1));
}

}  // namespace tallycone

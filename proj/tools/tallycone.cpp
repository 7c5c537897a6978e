#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "tallycone/basis.hpp"
#include "tallycone/counting.hpp"
#include "tallycone/dual_engine.hpp"
#include "tallycone/error.hpp"
#include "tallycone/io.hpp"
#include "tallycone/polytope.hpp"
#include "tallycone/series.hpp"
#include "tallycone/sheet.hpp"

namespace tc = tallycone;

namespace {

struct Options {
    std::string format = "text";
    std::string output;
    std::uint64_t seed = tc::kDefaultSeed;
    int threads = 0;
    bool long_run = false;
};

int effective_threads(int requested) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (const char* env = std::getenv("TALLYCONE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < t) t = cap;
    }
    return t;
}

void emit(const Options& opts, const std::string& content) {
    if (opts.output.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) tc::fail(tc::Errc::BadDimension, "cannot open output file: " + opts.output);
    out << content;
}

[[noreturn]] void unsupported_format(const std::string& verb, const std::string& format) {
    std::cerr << "usage error: format '" << format << "' is not available for '" << verb << "'\n";
    std::exit(2);
}

std::string join_ints(const std::vector<tc::Int>& values, char sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out << sep;
        out << values[i];
    }
    return out.str();
}

std::string flat_cells(const tc::IntVec& cells) {
    std::ostringstream out;
    for (tc::Index k = 0; k < cells.size(); ++k) {
        if (k) out << ' ';
        out << cells[k];
    }
    return out.str();
}

std::string rat_text(const tc::Rat& v) {
    std::ostringstream out;
    out << numerator(v);
    if (denominator(v) != 1) out << '/' << denominator(v);
    return out.str();
}

int run_hb(const Options& opts, int teams) {
    auto basis = tc::hilbert_basis(teams);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::basis_to_json(basis)));
    } else if (opts.format == "csv") {
        emit(opts, tc::basis_to_csv(basis));
    } else {
        std::ostringstream out;
        out << "teams " << teams << "\nsize " << basis.size() << '\n';
        for (const auto& e : basis) out << flat_cells(e.sheet.cells()) << '\n';
        emit(opts, out.str());
    }
    return 0;
}

int run_verify_hb(const Options& opts, int teams) {
    auto basis = tc::hilbert_basis(teams);
    std::vector<tc::ScoreSheet> candidate;
    candidate.reserve(basis.size());
    for (const auto& e : basis) candidate.push_back(e.sheet);
    auto report = tc::verify_hilbert_basis(teams, candidate, opts.seed);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::verification_to_json(report)));
    } else if (opts.format == "csv") {
        unsupported_format("verify-hb", opts.format);
    } else {
        std::ostringstream out;
        out << "generation " << (report.generation_passed() ? "pass" : "fail") << " sheets="
            << report.sheets_checked << '\n'
            << "irreducibility " << (report.irreducibility_passed() ? "pass" : "fail")
            << " pairs=" << report.pairs_checked << '\n'
            << "result " << (report.passed() ? "pass" : "fail") << '\n';
        for (const auto& s : report.generation_failures)
            out << "unreachable " << flat_cells(s.cells()) << '\n';
        for (const auto& [i, j] : report.irreducibility_failures)
            out << "reducible " << i << " by " << j << '\n';
        emit(opts, out.str());
    }
    return report.passed() ? 0 : 1;
}

int run_decompose(const Options& opts, const std::string& file) {
    tc::ScoreSheet sheet = tc::read_sheet_file(file);
    tc::Decomposition d = tc::decompose(sheet);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::decomposition_to_json(d)));
    } else if (opts.format == "csv") {
        std::vector<tc::ScoreSheet> parts;
        parts.reserve(d.parts.size());
        for (const auto& p : d.parts) parts.push_back(p.sheet);
        emit(opts, tc::sheet_list_to_csv(parts));
    } else {
        std::ostringstream out;
        out << "target " << flat_cells(d.target.cells()) << '\n'
            << "parts " << d.parts.size() << '\n';
        for (const auto& p : d.parts)
            out << flat_cells(p.sheet.cells()) << " scoring_teams=" << p.scorers << '\n';
        emit(opts, out.str());
    }
    return 0;
}

int run_count(const Options& opts, int teams, std::int64_t total) {
    tc::Int value = tc::count_ordered(teams, total);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::Json{
                       {"teams", teams}, {"total", total}, {"count", value.str()}}));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "G,count\n" << total << ',' << value << '\n';
        emit(opts, out.str());
    } else {
        emit(opts, value.str() + "\n");
    }
    return 0;
}

int run_count_table(const Options& opts, int teams, std::int64_t max_total) {
    tc::CountTable table = tc::count_ordered_table(teams, max_total);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::count_table_to_json(table)));
    } else {
        emit(opts, tc::count_table_to_csv(table));
    }
    return 0;
}

int run_quasipoly(const Options& opts, int teams, std::int64_t period) {
    if (period == 0) period = tc::lcm_upto(teams);
    tc::Quasipolynomial q = tc::fit_quasipolynomial(teams, period, effective_threads(opts.threads));
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::quasipolynomial_to_json(q)));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "class,power,numerator,denominator\n";
        for (std::size_t c = 0; c < q.classes.size(); ++c)
            for (std::size_t l = 0; l < q.classes[c].size(); ++l)
                out << c << ',' << l << ',' << numerator(q.classes[c][l]) << ','
                    << denominator(q.classes[c][l]) << '\n';
        emit(opts, out.str());
    } else {
        std::ostringstream out;
        out << "period " << q.period << " degree " << q.degree << '\n';
        for (std::size_t c = 0; c < q.classes.size(); ++c) {
            out << "class " << c << ':';
            for (const auto& coeff : q.classes[c]) out << ' ' << rat_text(coeff);
            out << '\n';
        }
        emit(opts, out.str());
    }
    return 0;
}

int run_period(const Options& opts, int teams) {
    const int max_teams = opts.long_run ? 7 : 5;
    std::int64_t p = tc::minimal_period(teams, max_teams, effective_threads(opts.threads));
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::Json{{"teams", teams}, {"period", p}}));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "n,period\n" << teams << ',' << p << '\n';
        emit(opts, out.str());
    } else {
        emit(opts, std::to_string(p) + "\n");
    }
    return 0;
}

int run_multiplicity(const Options& opts, int teams) {
    if (teams > (opts.long_run ? 7 : 5))
        tc::fail(tc::Errc::DimensionTooLarge,
                 "multiplicity is capped at n <= 5; rerun with --long-run for n <= 7");
    const int d = teams * teams - teams;
    tc::Quasipolynomial q =
        tc::fit_quasipolynomial(teams, tc::lcm_upto(teams), effective_threads(opts.threads));
    tc::Rat lead = q.leading_coefficient();
    tc::Rat mult = lead * tc::Rat(tc::factorial(d - 1));
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::Json{{"teams", teams},
                                          {"multiplicity", tc::rat_to_json(mult)},
                                          {"leading_coefficient", tc::rat_to_json(lead)}}));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "n,multiplicity,leading_coefficient\n"
            << teams << ',' << rat_text(mult) << ',' << rat_text(lead) << '\n';
        emit(opts, out.str());
    } else {
        emit(opts, rat_text(mult) + "\n");
    }
    return 0;
}

int run_series(const Options& opts, int teams, int prefix) {
    if (prefix > 0) {
        tc::CountTable counts = tc::count_ordered_table(teams, prefix - 1);
        std::vector<tc::Int> coeffs =
            tc::numerator_prefix(counts, tc::default_denominator(teams), prefix);
        if (opts.format == "json") {
            tc::Json arr = tc::Json::array();
            for (const auto& c : coeffs) arr.push_back(c.str());
            emit(opts, tc::dump_json(tc::Json{{"teams", teams},
                                              {"numerator_prefix", std::move(arr)},
                                              {"denominator", tc::default_denominator(teams)}}));
        } else if (opts.format == "csv") {
            std::ostringstream out;
            out << "power,coefficient\n";
            for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i] << '\n';
            emit(opts, out.str());
        } else {
            emit(opts, join_ints(coeffs, ',') + "\n");
        }
        return 0;
    }
    tc::SeriesRep rep = tc::hilbert_series(teams, opts.long_run);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::series_to_json(rep)));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "kind,index,value\n";
        for (std::size_t i = 0; i < rep.numerator.size(); ++i)
            out << "numerator," << i << ',' << rep.numerator[i] << '\n';
        for (std::size_t i = 0; i < rep.denominator.size(); ++i)
            out << "denominator," << i << ',' << rep.denominator[i] << '\n';
        emit(opts, out.str());
    } else {
        std::ostringstream out;
        out << "numerator: " << join_ints(rep.numerator, ',') << '\n'
            << "denominator: " << tc::denominator_factored_text(rep.denominator) << '\n';
        emit(opts, out.str());
    }
    return 0;
}

int run_expand(const Options& opts, int teams, const std::string& file, int length) {
    tc::SeriesRep rep;
    if (!file.empty()) {
        std::ifstream in(file, std::ios::binary);
        if (!in) tc::fail(tc::Errc::BadDimension, "cannot open file: " + file);
        rep = tc::series_from_json(tc::Json::parse(in));
    } else {
        rep = tc::hilbert_series(teams, opts.long_run);
    }
    std::vector<tc::Int> coeffs = tc::expand_series(rep, length);
    if (opts.format == "json") {
        tc::Json arr = tc::Json::array();
        for (const auto& c : coeffs) arr.push_back(c.str());
        emit(opts, tc::dump_json(tc::Json{{"coefficients", std::move(arr)}}));
    } else if (opts.format == "csv") {
        std::ostringstream out;
        out << "G,coefficient\n";
        for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << ',' << coeffs[i] << '\n';
        emit(opts, out.str());
    } else {
        emit(opts, join_ints(coeffs, ',') + "\n");
    }
    return 0;
}

int run_polytope(const Options& opts, int teams, bool vertices, bool triangulate) {
    if (triangulate) {
        tc::Triangulation tri = tc::pulling_triangulation(teams, opts.long_run);
        if (opts.format == "json") {
            emit(opts, tc::dump_json(tc::triangulation_to_json(tri)));
        } else if (opts.format == "csv") {
            unsupported_format("polytope --triangulate", opts.format);
        } else {
            tc::Int max_volume = 0;
            for (const auto& s : tri.simplices)
                if (s.volume > max_volume) max_volume = s.volume;
            std::ostringstream out;
            out << "simplices " << tri.simplices.size() << '\n'
                << "total_volume " << tri.total_volume << '\n'
                << "max_volume " << max_volume << '\n';
            emit(opts, out.str());
        }
        return 0;
    }
    if (vertices) {
        const int max_teams = opts.long_run ? 5 : 4;
        tc::VertexReport report = tc::verify_vertices(teams, max_teams);
        if (opts.format == "json") {
            emit(opts, tc::dump_json(tc::vertex_report_to_json(report, teams)));
        } else if (opts.format == "csv") {
            unsupported_format("polytope --vertices", opts.format);
        } else {
            std::ostringstream out;
            out << "vertices " << report.candidates << '\n'
                << "lattice_points_scanned " << report.lattice_points_scanned << '\n'
                << "result " << (report.passed() ? "pass" : "fail") << '\n';
            for (tc::Index b : report.not_vertex) out << "not_vertex " << b << '\n';
            for (const auto& p : report.extra_points) out << "extra " << flat_cells(p) << '\n';
            emit(opts, out.str());
        }
        return report.passed() ? 0 : 1;
    }
    tc::FacetSystem sys = tc::facet_system(teams);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::facet_system_to_json(sys)));
    } else if (opts.format == "csv") {
        unsupported_format("polytope", opts.format);
    } else {
        std::ostringstream out;
        out << "teams " << sys.teams << " dim " << sys.dim << " rows " << sys.rows.size() << '\n';
        for (const auto& row : sys.rows) {
            out << flat_cells(row.coeffs) << ' ';
            switch (row.rel) {
                case tc::Relation::Eq: out << "eq"; break;
                case tc::Relation::Ge0: out << "ge0"; break;
                case tc::Relation::Le1: out << "le1"; break;
            }
            out << '\n';
        }
        emit(opts, out.str());
    }
    return 0;
}

int run_dual_hb(const Options& opts, int teams) {
    tc::CompletionOptions copts;
    copts.long_run = opts.long_run;
    auto basis = tc::hilbert_basis_completion(tc::cone_system(teams), copts);
    if (opts.format == "json") {
        emit(opts, tc::dump_json(tc::cone_basis_to_json(teams, basis)));
    } else if (opts.format == "csv") {
        std::vector<tc::ScoreSheet> sheets;
        sheets.reserve(basis.size());
        for (const auto& v : basis) sheets.emplace_back(teams, v);
        emit(opts, tc::sheet_list_to_csv(sheets));
    } else {
        std::ostringstream out;
        out << "teams " << teams << "\nsize " << basis.size() << '\n';
        for (const auto& v : basis) out << flat_cells(v) << '\n';
        emit(opts, out.str());
    }
    return 0;
}

int run_selftest() {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "ok" : "MISMATCH") << ' ' << what << '\n';
        if (!ok) ++failures;
    };

    for (int n = 2; n <= 5; ++n)
        check(tc::Int(tc::hilbert_basis(n).size()) == tc::hb_cardinality(n),
              "basis size matches the closed formula, n=" + std::to_string(n));

    for (int n = 2; n <= 5; ++n) {
        const std::int64_t gmax = n == 5 ? 4 : 6;
        bool ok = true;
        for (std::int64_t g = 0; g <= gmax; ++g)
            if (tc::count_ordered(n, g) != tc::count_ordered_bruteforce(n, g)) ok = false;
        check(ok, "ordered counts match brute force, n=" + std::to_string(n));
    }

    for (int n = 2; n <= 4; ++n) {
        bool ok = true;
        tc::Int cumulative = 0;
        for (std::int64_t g = 0; g <= 20; ++g) {
            cumulative += tc::count_unordered(n, g);
            if (cumulative != tc::count_unordered_cumulative(n, g)) ok = false;
        }
        check(ok, "unordered cumulative counts telescope, n=" + std::to_string(n));
    }

    for (int n = 2; n <= 4; ++n) {
        tc::SeriesRep rep = tc::hilbert_series(n);
        const int len = 40;
        std::vector<tc::Int> expanded = tc::expand_series(rep, len);
        tc::CountTable counts = tc::count_ordered_table(n, len - 1);
        bool ok = true;
        for (int g = 0; g < len; ++g)
            if (expanded[g] != counts.values[g].second) ok = false;
        check(ok, "series expansion reproduces the counts, n=" + std::to_string(n));
    }

    for (int n = 2; n <= 3; ++n) {
        auto dual = tc::hilbert_basis_completion(tc::cone_system(n));
        auto direct = tc::hilbert_basis(n);
        bool ok = dual.size() == direct.size();
        for (std::size_t i = 0; ok && i < dual.size(); ++i)
            if (!(tc::ScoreSheet(n, dual[i]) == direct[i].sheet)) ok = false;
        check(ok, "completion agrees with the constructive basis, n=" + std::to_string(n));
    }

    check(tc::minimal_period(2) == 2 && tc::minimal_period(3) == 6, "minimal periods 2 and 6");
    check(tc::multiplicity_of(3) == tc::Rat(1, 6), "multiplicity 1/6 at n=3");

    for (int n = 2; n <= 3; ++n)
        check(tc::verify_vertices(n).passed(), "vertex verification, n=" + std::to_string(n));

    {
        bool ok = true;
        for (const auto& s : tc::sample_ordered_sheets(4, 200, 20, tc::kDefaultSeed)) {
            tc::Decomposition d = tc::decompose(s);
            tc::ScoreSheet sum = tc::zero_sheet(4);
            for (const auto& p : d.parts) sum = tc::add_sheets(sum, p.sheet);
            if (!(sum == s)) ok = false;
        }
        check(ok, "greedy decomposition round-trips on random sheets");
    }

    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tallycone: invariants of the monoid of ordered round-robin score sheets"};
    app.require_subcommand(0, 1);

    Options opts;
    bool selftest = false;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("-o,--output", opts.output, "write output to a file instead of stdout");
    app.add_option("--seed", opts.seed, "seed for randomized verification sampling")
        ->capture_default_str();
    app.add_option("--threads", opts.threads,
                   "worker threads (0 = auto; TALLYCONE_THREADS caps the value)");
    app.add_flag("--long-run", opts.long_run, "allow expensive parameter ranges");
    app.add_flag("--selftest", selftest, "run the cross-oracle self test and exit");

    int teams = 0;
    std::int64_t total = 0, max_total = 0, period = 0;
    int prefix = 0, length = 16;
    std::string file;
    bool vertices = false, triangulate = false;

    auto* hb = app.add_subcommand("hb", "list the Hilbert basis");
    hb->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 8));

    auto* verify = app.add_subcommand("verify-hb", "verify the basis against the membership criterion");
    verify->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 4));

    auto* dec = app.add_subcommand("decompose", "decompose an ordered sheet into generators");
    dec->add_option("--file", file, "sheet file (.json or .csv)")->required();

    auto* count = app.add_subcommand("count", "count ordered sheets with a given total");
    count->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 12));
    count->add_option("-G,--total", total, "goal total")->required()->check(CLI::NonNegativeNumber);

    auto* table = app.add_subcommand("count-table", "table of counts for G = 0..max");
    table->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 12));
    table->add_option("-G,--max", max_total, "largest goal total")
        ->required()
        ->check(CLI::NonNegativeNumber);

    auto* quasi = app.add_subcommand("quasipoly", "fit the counting quasipolynomial");
    quasi->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 6));
    quasi->add_option("-p,--period", period, "assumed period (default lcm(1..n))")
        ->check(CLI::PositiveNumber);

    auto* per = app.add_subcommand("period", "minimal quasipolynomial period");
    per->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 7));

    auto* mult = app.add_subcommand("multiplicity", "monoid multiplicity from the fitted leading term");
    mult->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 7));

    auto* ser = app.add_subcommand("series", "Hilbert series numerator over the standard denominator");
    ser->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 7));
    ser->add_option("--prefix", prefix, "emit only the first K numerator coefficients")
        ->check(CLI::PositiveNumber);

    auto* exp = app.add_subcommand("expand", "expand a rational series into counts");
    exp->add_option("-n,--teams", teams, "team count")->check(CLI::Range(2, 7));
    exp->add_option("--file", file, "series JSON file (instead of -n)");
    exp->add_option("-k,--length", length, "number of coefficients")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* poly = app.add_subcommand("polytope", "cross-section polytope tools");
    poly->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 5));
    poly->add_flag("--vertices", vertices, "verify that the basis elements are exactly the vertices");
    poly->add_flag("--triangulate", triangulate, "compute the pulling triangulation");

    auto* dual = app.add_subcommand("dual-hb", "Hilbert basis via halfspace completion");
    dual->add_option("-n,--teams", teams, "team count")->required()->check(CLI::Range(2, 5));

    for (CLI::App* sub :
         {hb, verify, dec, count, table, quasi, per, mult, ser, exp, poly, dual})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (selftest) return run_selftest();
        if (hb->parsed()) return run_hb(opts, teams);
        if (verify->parsed()) return run_verify_hb(opts, teams);
        if (dec->parsed()) return run_decompose(opts, file);
        if (count->parsed()) return run_count(opts, teams, total);
        if (table->parsed()) return run_count_table(opts, teams, max_total);
        if (quasi->parsed()) return run_quasipoly(opts, teams, period);
        if (per->parsed()) return run_period(opts, teams);
        if (mult->parsed()) return run_multiplicity(opts, teams);
        if (ser->parsed()) return run_series(opts, teams, prefix);
        if (exp->parsed()) {
            if (teams == 0 && file.empty()) {
                std::cerr << "usage error: expand needs -n or --file\n";
                return 2;
            }
            return run_expand(opts, teams, file, length);
        }
        if (poly->parsed()) return run_polytope(opts, teams, vertices, triangulate);
        if (dual->parsed()) return run_dual_hb(opts, teams);
        std::cerr << app.help();
        return 2;
    } catch (const tc::Error& e) {
        std::cerr << tc::errc_name(e.code()) << ": " << e.what() << '\n';
        switch (e.code()) {
            case tc::Errc::BadDimension:
            case tc::Errc::BadPermutation:
            case tc::Errc::DimensionTooLarge:
            case tc::Errc::TooLarge:
            case tc::Errc::EmptyInput:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

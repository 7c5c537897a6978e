#include "tallycone/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tallycone/error.hpp"

namespace tallycone {

namespace {

constexpr std::int64_t kJsonIntMax = 9007199254740991;  // 2^53 - 1, safe everywhere

Int parse_int(const std::string& text) {
    try {
        return Int(text);
    } catch (const std::exception&) {
        fail(Errc::BadDimension, "not an integer: '" + text + "'");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::BadDimension, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json int_to_json(const Int& v) {
    if (v >= -kJsonIntMax && v <= kJsonIntMax) return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return parse_int(j.get<std::string>());
    fail(Errc::BadDimension, "expected an integer or a decimal string");
}

Json rat_to_json(const Rat& v) {
    return Json::array({numerator(v).str(), denominator(v).str()});
}

Json sheet_to_json(const ScoreSheet& s) {
    Json goals = Json::array();
    for (int i = 0; i < s.teams(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < s.teams(); ++j)
            row.push_back(i == j ? Json(0) : int_to_json(s.goals(i, j)));
        goals.push_back(std::move(row));
    }
    return Json{{"teams", s.teams()}, {"goals", std::move(goals)}};
}

ScoreSheet sheet_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("teams") || !j.contains("goals"))
        fail(Errc::BadDimension, "sheet JSON needs 'teams' and 'goals'");
    const int n = j.at("teams").get<int>();
    if (n < 2) fail(Errc::BadDimension, "a score sheet needs at least 2 teams");
    const Json& goals = j.at("goals");
    if (!goals.is_array() || static_cast<int>(goals.size()) != n)
        fail(Errc::BadDimension, "'goals' must be an n-by-n grid");
    IntMat grid(n, n);
    for (int i = 0; i < n; ++i) {
        const Json& row = goals.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail(Errc::BadDimension, "'goals' must be an n-by-n grid");
        for (int k = 0; k < n; ++k) grid(i, k) = int_from_json(row.at(k));
    }
    return make_sheet(n, grid);
}

std::string sheet_to_csv(const ScoreSheet& s) {
    std::ostringstream out;
    for (int i = 0; i < s.teams(); ++i) {
        for (int j = 0; j < s.teams(); ++j) {
            if (j) out << ',';
            out << (i == j ? Int(0) : s.goals(i, j));
        }
        out << '\n';
    }
    return out.str();
}

ScoreSheet sheet_from_csv(const std::string& text) {
    std::vector<std::vector<Int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<Int> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) row.push_back(parse_int(cell));
        rows.push_back(std::move(row));
    }
    const int n = static_cast<int>(rows.size());
    if (n < 2) fail(Errc::BadDimension, "a score sheet needs at least 2 teams");
    IntMat grid(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            fail(Errc::BadDimension, "CSV sheet must be an n-by-n grid");
        for (int j = 0; j < n; ++j) grid(i, j) = rows[i][j];
    }
    return make_sheet(n, grid);
}

ScoreSheet read_sheet_file(const std::string& path) {
    const std::string text = read_file(path);
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0)
        return sheet_from_csv(text);
    return sheet_from_json(Json::parse(text));
}

Json sheet_list_to_json(const std::vector<ScoreSheet>& sheets) {
    Json arr = Json::array();
    for (const auto& s : sheets) arr.push_back(sheet_to_json(s));
    return arr;
}

std::string sheet_list_to_csv(const std::vector<ScoreSheet>& sheets) {
    std::ostringstream out;
    if (!sheets.empty()) {
        const int n = sheets.front().teams();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out << (i || j ? "," : "") << 'g' << i + 1 << j + 1;
        out << '\n';
    }
    for (const auto& s : sheets) {
        const int n = s.teams();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i || j) out << ',';
                out << (i == j ? Int(0) : s.goals(i, j));
            }
        out << '\n';
    }
    return out.str();
}

Json basis_to_json(const std::vector<HBElement>& basis) {
    Json arr = Json::array();
    for (const auto& e : basis) {
        Json item = sheet_to_json(e.sheet);
        item["scoring_teams"] = e.scorers;
        arr.push_back(std::move(item));
    }
    return arr;
}

std::string basis_to_csv(const std::vector<HBElement>& basis) {
    std::vector<ScoreSheet> sheets;
    sheets.reserve(basis.size());
    for (const auto& e : basis) sheets.push_back(e.sheet);
    return sheet_list_to_csv(sheets);
}

Json decomposition_to_json(const Decomposition& d) {
    Json parts = Json::array();
    for (const auto& p : d.parts) {
        Json item = sheet_to_json(p.sheet);
        item["scoring_teams"] = p.scorers;
        parts.push_back(std::move(item));
    }
    return Json{{"target", sheet_to_json(d.target)},
                {"part_count", d.parts.size()},
                {"parts", std::move(parts)}};
}

Json verification_to_json(const VerificationReport& r) {
    Json generation = Json::array();
    for (const auto& s : r.generation_failures) generation.push_back(sheet_to_json(s));
    Json irreducibility = Json::array();
    for (const auto& [i, j] : r.irreducibility_failures)
        irreducibility.push_back(Json::array({i, j}));
    return Json{{"passed", r.passed()},
                {"sheets_checked", r.sheets_checked},
                {"pairs_checked", r.pairs_checked},
                {"generation", Json{{"passed", r.generation_passed()},
                                    {"failures", std::move(generation)}}},
                {"irreducibility", Json{{"passed", r.irreducibility_passed()},
                                        {"failures", std::move(irreducibility)}}}};
}

Json count_table_to_json(const CountTable& t) {
    Json rows = Json::array();
    for (const auto& [g, value] : t.values) rows.push_back(Json::array({g, value.str()}));
    return Json{{"teams", t.teams}, {"counts", std::move(rows)}};
}

std::string count_table_to_csv(const CountTable& t) {
    std::ostringstream out;
    out << "G,count\n";
    for (const auto& [g, value] : t.values) out << g << ',' << value << '\n';
    return out.str();
}

Json quasipolynomial_to_json(const Quasipolynomial& q) {
    Json classes = Json::array();
    for (const auto& row : q.classes) {
        Json coeffs = Json::array();
        for (const auto& c : row) coeffs.push_back(rat_to_json(c));
        classes.push_back(std::move(coeffs));
    }
    return Json{{"period", q.period}, {"degree", q.degree}, {"classes", std::move(classes)}};
}

Json series_to_json(const SeriesRep& rep) {
    Json numerator = Json::array();
    for (const auto& c : rep.numerator) numerator.push_back(c.str());
    return Json{{"numerator", std::move(numerator)}, {"denominator", rep.denominator}};
}

SeriesRep series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("numerator") || !j.contains("denominator"))
        fail(Errc::BadDimension, "series JSON needs 'numerator' and 'denominator'");
    SeriesRep rep;
    for (const auto& c : j.at("numerator")) rep.numerator.push_back(int_from_json(c));
    for (const auto& d : j.at("denominator")) rep.denominator.push_back(d.get<int>());
    return rep;
}

std::string denominator_factored_text(const std::vector<int>& denominator) {
    std::vector<int> sorted = denominator;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream out;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out << "(1-t";
        if (sorted[i] != 1) out << '^' << sorted[i];
        out << ')';
        if (j - i > 1) out << '^' << j - i;
        i = j;
    }
    return out.str();
}

namespace {

const char* relation_tag(Relation rel) {
    switch (rel) {
        case Relation::Eq: return "eq";
        case Relation::Ge0: return "ge0";
        case Relation::Le1: return "le1";
    }
    return "?";
}

}  // namespace

Json facet_system_to_json(const FacetSystem& sys) {
    Json rows = Json::array();
    for (const auto& row : sys.rows) {
        Json coeffs = Json::array();
        for (Index k = 0; k < row.coeffs.size(); ++k) coeffs.push_back(int_to_json(row.coeffs[k]));
        rows.push_back(Json{{"coeffs", std::move(coeffs)}, {"rel", relation_tag(row.rel)}});
    }
    return Json{{"teams", sys.teams}, {"dim", sys.dim}, {"rows", std::move(rows)}};
}

Json vertex_report_to_json(const VertexReport& r, int teams) {
    Json extra = Json::array();
    for (const auto& p : r.extra_points) {
        Json v = Json::array();
        for (Index k = 0; k < p.size(); ++k) v.push_back(int_to_json(p[k]));
        extra.push_back(std::move(v));
    }
    return Json{{"teams", teams},
                {"passed", r.passed()},
                {"vertices", r.candidates},
                {"lattice_points_scanned", r.lattice_points_scanned},
                {"not_vertex", r.not_vertex},
                {"extra_points", std::move(extra)}};
}

Json triangulation_to_json(const Triangulation& t) {
    Json simplices = Json::array();
    for (const auto& s : t.simplices)
        simplices.push_back(Json{{"vertices", s.vertices}, {"volume", s.volume.str()}});
    return Json{{"teams", t.teams},
                {"dim", t.dim},
                {"points", sheet_list_to_json(t.points)},
                {"simplex_count", t.simplices.size()},
                {"total_volume", t.total_volume.str()},
                {"simplices", std::move(simplices)}};
}

Json cone_basis_to_json(int teams, const std::vector<IntVec>& basis) {
    std::vector<ScoreSheet> sheets;
    sheets.reserve(basis.size());
    for (const auto& v : basis) sheets.emplace_back(teams, v);
    return sheet_list_to_json(sheets);
}

}  // namespace tallycone

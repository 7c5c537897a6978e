#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tallycone/basis.hpp"
#include "tallycone/counting.hpp"
#include "tallycone/dual_engine.hpp"
#include "tallycone/polytope.hpp"
#include "tallycone/series.hpp"
#include "tallycone/sheet.hpp"

namespace tallycone {

/// Insertion-ordered JSON keeps every emitted document byte-stable.
using Json = nlohmann::ordered_json;

std::string dump_json(const Json& j);

/// Plain JSON number when the value fits 64 bits, decimal string otherwise.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

/// Exact rational as a [numerator, denominator] pair of decimal strings.
Json rat_to_json(const Rat& v);

Json sheet_to_json(const ScoreSheet& s);
ScoreSheet sheet_from_json(const Json& j);

std::string sheet_to_csv(const ScoreSheet& s);
ScoreSheet sheet_from_csv(const std::string& text);

/// Reads a sheet file, dispatching on the .csv / .json extension.
ScoreSheet read_sheet_file(const std::string& path);

Json sheet_list_to_json(const std::vector<ScoreSheet>& sheets);
std::string sheet_list_to_csv(const std::vector<ScoreSheet>& sheets);

Json basis_to_json(const std::vector<HBElement>& basis);
std::string basis_to_csv(const std::vector<HBElement>& basis);

Json decomposition_to_json(const Decomposition& d);

Json verification_to_json(const VerificationReport& r);

Json count_table_to_json(const CountTable& t);
std::string count_table_to_csv(const CountTable& t);

Json quasipolynomial_to_json(const Quasipolynomial& q);

Json series_to_json(const SeriesRep& rep);
SeriesRep series_from_json(const Json& j);

/// Denominator in factored (1-t^d)^m notation.
std::string denominator_factored_text(const std::vector<int>& denominator);

Json facet_system_to_json(const FacetSystem& sys);

Json vertex_report_to_json(const VertexReport& r, int teams);

Json triangulation_to_json(const Triangulation& t);

/// Completion output in the same sheet-list shape as the basis.
Json cone_basis_to_json(int teams, const std::vector<IntVec>& basis);

}  // namespace tallycone

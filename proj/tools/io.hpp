#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrangeval/constraints.hpp"
#include "arrangeval/hadwiger.hpp"
#include "arrangeval/scissors.hpp"

namespace arrangeval::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "arrangeval/1";

// Malformed input: unreadable file, bad JSON, missing fields, bad rationals.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);

Arrangement parse_arrangement(const Json& j);
std::vector<Vec> parse_points(const Json& j);

Json to_json(const Rational& q);
Json to_json(const Vec& v);
Json to_json(const IntVec& v);
Json to_json(const ValidationReport& r);
Json to_json(const Arrangement& a);

// Common report head: schema, command, seed, validation.
Json report_header(const std::string& command, std::uint64_t seed, const ValidationReport& validation);

Json filtration_json(const ArrangementComplex& c, const FiltrationReport& r);
std::string filtration_csv(const ArrangementComplex& c, const FiltrationReport& r);

std::string mode_name(VerifyMode mode);
Json verification_json(const VerificationReport& r);
std::string verification_csv(const VerificationReport& r);

struct HadwigerRow {
  std::size_t rank;
  std::string flag;
  Rational value;
  Rational via_leray;
};
std::vector<HadwigerRow> hadwiger_rows(const ArrangementComplex& c, const Polytope& p);
Json hadwiger_json(const std::vector<HadwigerRow>& rows);
std::string hadwiger_csv(const std::vector<HadwigerRow>& rows);

// Rows (rank, flag-id, orientation, coefficient) over both orientations of every flag.
std::string decomposition_csv(const ArrangementComplex& c, const DecompositionTable& t);

Json verdict_json(const CongruenceVerdict& v);
Json invariant_table_json(const InvariantTable& t);
std::string glur_csv(const GlurResult& r);
std::string zn_csv(const ZnResult& r);

// Planar drawing of the hyperplanes and labeled top cells; toric input is drawn on the unit square.
std::string render_svg(const ArrangementComplex& c, const std::string& comment);

// Comment line prefixed to CSV output.
std::string csv_preamble(const std::string& command, std::uint64_t seed, const ValidationReport& validation);

}  // namespace arrangeval::io

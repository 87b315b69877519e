#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "curvesys/conditions.hpp"
#include "curvesys/farey.hpp"
#include "curvesys/genus.hpp"
#include "curvesys/oracle.hpp"
#include "curvesys/scheme.hpp"
#include "curvesys/solver.hpp"

namespace curvesys {

using Json = nlohmann::ordered_json;

/// {"n": N, "entries": [...column order...], "metadata": {...}}.
/// Entries may be JSON integers or decimal strings (for values beyond 64 bits).
struct SchemeDocument {
  Scheme scheme;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const SchemeDocument&, const SchemeDocument&) = default;
};

/// Throws ParseError on malformed JSON or a wrong shape.
SchemeDocument parse_scheme_document(std::string_view text);
std::string emit_scheme_document(const SchemeDocument& doc);
SchemeDocument read_scheme_file(const std::filesystem::path& path);

/// Integer as a JSON number when it fits in 64 bits, else as a string.
Json integer_json(const Integer& v);
Integer parse_integer_json(const Json& j);

Json system_json(const CurveSystem& system);
Json reason_json(const Reason& reason);
Json toz_json(const TozReport& report);
Json constraints_json(const KappaConstraintSet& constraints, std::size_t limit);
Json witness_json(const NormalizedWitness& w);
Json verdict_json(const Verdict& v, std::size_t orbit_limit = 64);
Json decomposition_json(const Decomposition& d);
Json oracle_json(const OracleResult& r);
Json clique_json(const CliqueResult& r);

/// Deterministic SVG of a curve system on the flat unit torus (512x512).
/// Empty classes are omitted; a message for each is appended to `warnings`.
std::string svg_document(const CurveSystem& system, std::vector<std::string>* warnings = nullptr);
/// Writes svg_document to `out`. Throws IoError if the file cannot be written.
std::vector<std::string> render_svg(const CurveSystem& system, const std::filesystem::path& out);

}  // namespace curvesys

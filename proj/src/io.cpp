#include "curvesys/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "curvesys/error.hpp"

namespace curvesys {

namespace {

std::string reason_kind(const Reason& r) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UnresolvableZero>) return "UnresolvableZero";
        else if constexpr (std::is_same_v<T, FailedTriangle>) return "FailedTriangle";
        else if constexpr (std::is_same_v<T, FailedPluecker>) return "FailedPluecker";
        else if constexpr (std::is_same_v<T, FailedToz>) return "FailedToz";
        else return "NoAllowedKappa";
      },
      r);
}

Json index_array(std::initializer_list<CurveIndex> idx) {
  Json a = Json::array();
  for (auto i : idx) a.push_back(i);
  return a;
}

}  // namespace

Json integer_json(const Integer& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

Integer parse_integer_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start || !std::all_of(s.begin() + start, s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw ParseError("not a decimal integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw ParseError("expected an integer, got " + j.dump());
}

SchemeDocument parse_scheme_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end(), nullptr, true, false);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("scheme document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<std::int64_t>() < 0)
    throw ParseError("\"n\" must be a nonnegative integer");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("\"entries\" must be an array");
  for (const auto& [key, _] : j.items())
    if (key != "n" && key != "entries" && key != "metadata") throw ParseError("unknown field \"" + key + "\"");

  SchemeDocument doc;
  const auto n = j["n"].get<std::size_t>();
  std::vector<Integer> entries;
  for (const auto& e : j["entries"]) entries.push_back(parse_integer_json(e));
  try {
    doc.scheme = Scheme(n, std::move(entries));
  } catch (const InvalidShape& e) {
    throw ParseError(e.what());
  }
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) throw ParseError("\"metadata\" must be an object of strings");
    for (const auto& [key, value] : j["metadata"].items()) {
      if (!value.is_string()) throw ParseError("metadata value for \"" + key + "\" must be a string");
      doc.metadata[key] = value.get<std::string>();
    }
  }
  return doc;
}

std::string emit_scheme_document(const SchemeDocument& doc) {
  Json j;
  j["n"] = doc.scheme.size();
  j["entries"] = Json::array();
  for (const auto& e : doc.scheme.entries()) j["entries"].push_back(integer_json(e));
  if (!doc.metadata.empty()) {
    j["metadata"] = Json::object();
    for (const auto& [k, v] : doc.metadata) j["metadata"][k] = v;
  }
  return j.dump();
}

SchemeDocument read_scheme_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scheme_document(buf.str());
}

Json system_json(const CurveSystem& system) {
  Json a = Json::array();
  for (const auto& c : system) {
    if (c.is_empty()) a.push_back("empty");
    else a.push_back(Json::array({integer_json(c.p()), integer_json(c.q())}));
  }
  return a;
}

Json reason_json(const Reason& reason) {
  Json j;
  j["kind"] = reason_kind(reason);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UnresolvableZero>) {
          j["indices"] = index_array({x.i, x.j});
          j["detail"] = "m_" + std::to_string(x.i) + "," + std::to_string(x.j) +
                        " = 0 but curves " + std::to_string(x.i) + " and " + std::to_string(x.j) +
                        " are neither parallel nor empty";
        } else if constexpr (std::is_same_v<T, FailedTriangle>) {
          j["indices"] = index_array({x.i, x.j, x.k});
          j["detail"] = "pairwise gcds of the triple differ";
        } else if constexpr (std::is_same_v<T, FailedPluecker>) {
          j["indices"] = index_array({x.i, x.j, x.k, x.l});
          j["detail"] = "Pluecker relation is nonzero";
        } else if constexpr (std::is_same_v<T, NoAllowedKappa>) {
          j["prime"] = integer_json(x.prime);
          j["detail"] = "every kappa class is forbidden modulo a power of " + to_string(x.prime);
        } else {
          j["prime"] = integer_json(x.prime);
          j["detail"] = "toz(m;" + to_string(x.prime) + ") = " + to_string(x.total) + " is not below " + to_string(x.prime);
        }
      },
      reason);
  return j;
}

Json toz_json(const TozReport& report) {
  Json j;
  j["base_gcd"] = integer_json(report.base_gcd);
  j["primes"] = Json::array();
  for (const auto& tp : report.per_prime) {
    Json e;
    e["prime"] = integer_json(tp.prime);
    e["nu"] = tp.nu;
    e["valuations"] = tp.valuations;
    e["contributions"] = Json::array();
    for (const auto& c : tp.contributions) e["contributions"].push_back(to_string(c));
    e["toz"] = to_string(tp.total);
    j["primes"].push_back(std::move(e));
  }
  j["checked"] = Json::array();
  for (const auto& [p, total] : report.checked_primes)
    j["checked"].push_back({{"prime", integer_json(p)}, {"toz", to_string(total)}, {"ok", total < p}});
  return j;
}

Json constraints_json(const KappaConstraintSet& constraints, std::size_t limit) {
  Json j;
  j["modulus"] = integer_json(constraints.base_gcd);
  j["count"] = integer_json(constraints.orbit_count());
  j["allowed_kappa"] = Json::array();
  for (const auto& k : constraints.representatives(limit)) j["allowed_kappa"].push_back(integer_json(k));
  j["per_prime"] = Json::array();
  for (const auto& c : constraints.per_prime) {
    Json e;
    e["prime"] = integer_json(c.prime);
    e["nu"] = c.nu;
    e["period"] = integer_json(c.period);
    e["allowed"] = Json::array();
    for (const auto& r : c.allowed) e["allowed"].push_back(integer_json(r));
    j["per_prime"].push_back(std::move(e));
  }
  return j;
}

Json witness_json(const NormalizedWitness& w) {
  Json j;
  j["kappa"] = integer_json(w.kappa);
  j["r"] = Json::array();
  for (const auto& r : w.r) j["r"].push_back(integer_json(r));
  j["system"] = system_json(w.system);
  return j;
}

Json verdict_json(const Verdict& v, std::size_t orbit_limit) {
  Json j;
  j["status"] = v.realizable() ? "torus" : "not_torus";
  j["reasons"] = Json::array();
  for (const auto& r : v.reasons) j["reasons"].push_back(reason_json(r));
  if (v.witness) {
    j["witness"] = system_json(*v.witness);
    j["used_empty"] = v.used_empty;
  }
  if (v.kappa) j["kappa"] = integer_json(*v.kappa);
  if (v.toz) j["toz_agrees"] = v.toz_agrees;
  if (v.constraints) j["orbits"] = constraints_json(*v.constraints, orbit_limit);
  if (v.toz) j["toz"] = toz_json(*v.toz);
  if (v.reduction && !v.reduction->steps.empty()) {
    Json steps = Json::array();
    for (const auto& s : v.reduction->steps) {
      Json e{{"removed", s.removed}};
      if (s.kind == ReductionStep::Kind::Duplicate) {
        e["kind"] = "duplicate";
        e["of"] = s.duplicate_of;
        e["sign"] = s.sign;
      } else {
        e["kind"] = "empty";
      }
      steps.push_back(std::move(e));
    }
    j["reduction"] = std::move(steps);
  }
  return j;
}

Json decomposition_json(const Decomposition& d) {
  Json j;
  j["left"] = Json::array();
  for (const auto& e : d.left.entries()) j["left"].push_back(integer_json(e));
  j["right"] = Json::array();
  for (const auto& e : d.right.entries()) j["right"].push_back(integer_json(e));
  j["degenerate"] = d.degenerate;
  j["left_verdict"] = verdict_json(d.left_verdict);
  j["right_verdict"] = verdict_json(d.right_verdict);
  return j;
}

Json oracle_json(const OracleResult& r) {
  Json j;
  j["status"] = r.realizable ? "torus" : "not_torus";
  j["orbit_count"] = r.orbit_count;
  j["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back(witness_json(w));
  return j;
}

Json clique_json(const CliqueResult& r) {
  Json j;
  j["d"] = r.d;
  j["size"] = r.size;
  j["witness"] = Json::array();
  for (const auto& c : r.witness) j["witness"].push_back(Json::array({c.p, c.q}));
  return j;
}

namespace {

constexpr double kCanvas = 512.0;
constexpr std::int64_t kMaxWraps = 200000;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// Curve k starts on the left wall (bottom wall for vertical classes) at an
// irrational offset, which keeps parallel curves apart and every curve off
// the lattice corners.
std::pair<double, double> start_point(std::size_t k, double p) {
  const double a = (static_cast<double>(k) + 1) * 0.6180339887498949 + 0.05;
  const double offset = a - std::floor(a);
  if (p != 0) return {0.0, offset};
  return {offset, 0.0};
}

std::string path_data(double p, double q, std::pair<double, double> c) {
  // Parameters t in (0,1) where c + t(p,q) crosses a vertical or horizontal wall.
  std::vector<double> ts{0.0, 1.0};
  const auto walls = [&](double start, double step) {
    if (step == 0) return;
    const double end = start + step;
    const double lo = std::min(start, end), hi = std::max(start, end);
    for (double k = std::floor(lo) + 1; k < hi; k += 1) ts.push_back((k - start) / step);
  };
  walls(c.first, p);
  walls(c.second, q);
  std::sort(ts.begin(), ts.end());
  std::string d;
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const double t0 = ts[i], t1 = ts[i + 1];
    if (t1 - t0 <= 0) continue;
    const double tm = (t0 + t1) / 2;
    const double sx = std::floor(c.first + tm * p), sy = std::floor(c.second + tm * q);
    const double x0 = c.first + t0 * p - sx, y0 = c.second + t0 * q - sy;
    const double x1 = c.first + t1 * p - sx, y1 = c.second + t1 * q - sy;
    if (!d.empty()) d += ' ';
    d += "M" + fmt(x0 * kCanvas) + " " + fmt((1 - y0) * kCanvas) + " L" + fmt(x1 * kCanvas) + " " +
         fmt((1 - y1) * kCanvas);
  }
  return d;
}

}  // namespace

std::string svg_document(const CurveSystem& system, std::vector<std::string>* warnings) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"512\" height=\"512\" viewBox=\"0 0 512 512\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
  const std::size_t n = system.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& c = system[k];
    if (c.is_empty()) {
      if (warnings) warnings->push_back("curve " + std::to_string(k + 1) + " is empty and is not drawn");
      continue;
    }
    if (abs_value(c.p()) + abs_value(c.q()) > kMaxWraps)
      throw DomainError("class " + to_string(c) + " wraps too often to render");
    const double p = static_cast<double>(static_cast<std::int64_t>(c.p()));
    const double q = static_cast<double>(static_cast<std::int64_t>(c.q()));
    const std::string hue = fmt(static_cast<double>(k) * 360.0 / static_cast<double>(n));
    out << "<path id=\"curve" << k + 1 << "\" fill=\"none\" stroke=\"hsl(" << hue << ",80%,40%)\" stroke-width=\"2\" d=\""
        << path_data(p, q, start_point(k, p)) << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<std::string> render_svg(const CurveSystem& system, const std::filesystem::path& out) {
  std::vector<std::string> warnings;
  const std::string doc = svg_document(system, &warnings);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw IoError("cannot write " + out.string());
  f << doc;
  f.close();
  if (!f) throw IoError("failed writing " + out.string());
  return warnings;
}

}  // namespace curvesys

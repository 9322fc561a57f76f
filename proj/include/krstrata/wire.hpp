#pragma once

/**
 * @file wire.hpp
 * @brief JSON / CSV / DOT serialization of admissible elements, Hasse diagrams
 *        and verification reports. Integers only; field order is fixed.
 *
 * Needs nlohmann/json (json.hpp) on the include path.
 */

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "krstrata/admissible.hpp"
#include "krstrata/bruhat.hpp"
#include "krstrata/errors.hpp"
#include "krstrata/strata.hpp"
#include "krstrata/verify.hpp"

namespace krs {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& record_fields() {
  static const std::vector<std::string> fields{"g",     "x0",    "w",     "u",      "sigma",  "length",
                                               "prank", "fixed", "cycles", "kernels", "possibly_maximal"};
  return fields;
}

inline Json to_json(const AdmissibleElement& x) {
  Json cycles = Json::array();
  for (const auto& z : x.cycle_set()) cycles.push_back(z.points);
  Json kernels = Json::array();
  for (int i = 1; i <= 2 * x.genus(); ++i) kernels.push_back(to_string(kernel_type(x, i)));
  Json j;
  j["g"] = x.genus();
  j["x0"] = x.x0().coords();
  j["w"] = x.w().images();
  j["u"] = x.u().bits();
  j["sigma"] = x.sigma().images();
  j["length"] = x.length();
  j["prank"] = x.prank();
  j["fixed"] = x.fixed();
  j["cycles"] = std::move(cycles);
  j["kernels"] = std::move(kernels);
  j["possibly_maximal"] = x.possibly_maximal();
  return j;
}

/// Rebuild the element from g, x0 and w and check every derived field.
inline AdmissibleElement element_from_json(const Json& j) {
  try {
    const int g = j.at("g").get<int>();
    AffineElement raw{Cocharacter(j.at("x0").get<std::vector<int>>()),
                      SignedPermutation(j.at("w").get<std::vector<int>>())};
    require_same_genus(g, raw.genus());
    AdmissibleElement x(std::move(raw));
    if (to_json(x) != j) throw InvalidValue("record fields disagree with the recomputed element");
    return x;
  } catch (const Json::exception& e) {
    throw InvalidValue(std::string("malformed element record: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::string cycles_text(const std::vector<Cycle>& zs) {
  std::string out;
  for (const auto& z : zs) out += "(" + join(z.points, ' ') + ")";
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::vector<int> parse_ints(const std::string& s, char sep) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& item : split(s, sep)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidValue("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw InvalidValue("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

} // namespace detail

inline std::string csv_header() { return detail::join(record_fields(), ','); }

inline std::string to_csv_row(const AdmissibleElement& x) {
  std::string u;
  for (int b : x.u().bits()) u += static_cast<char>('0' + b);
  std::vector<std::string> kernels;
  for (int i = 1; i <= 2 * x.genus(); ++i) kernels.push_back(to_string(kernel_type(x, i)));
  std::vector<std::string> cols{std::to_string(x.genus()),
                                detail::join(x.x0().coords(), ';'),
                                detail::join(x.w().images(), ';'),
                                u,
                                detail::join(x.sigma().images(), ';'),
                                std::to_string(x.length()),
                                std::to_string(x.prank()),
                                detail::join(x.fixed(), ';'),
                                detail::cycles_text(x.cycle_set()),
                                detail::join(kernels, ';'),
                                x.possibly_maximal() ? "true" : "false"};
  return detail::join(cols, ',');
}

/// Inverse of to_csv_row; derived columns must match the recomputed element.
inline AdmissibleElement element_from_csv_row(const std::string& row) {
  const auto cols = detail::split(row, ',');
  if (cols.size() != record_fields().size()) throw InvalidValue("CSV row has the wrong number of columns");
  const int g = detail::parse_ints(cols[0], ';').at(0);
  AffineElement raw{Cocharacter(detail::parse_ints(cols[1], ';')), SignedPermutation(detail::parse_ints(cols[2], ';'))};
  require_same_genus(g, raw.genus());
  AdmissibleElement x(std::move(raw));
  if (to_csv_row(x) != row) throw InvalidValue("CSV row disagrees with the recomputed element");
  return x;
}

// ---------------------------------------------------------------------------
// Hasse diagrams

inline std::string to_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph hasse {\n";
  for (const auto& x : h.nodes) {
    const auto id = element_id(x);
    out << "  \"" << id << "\" [label=\"" << id << "\\nlength " << im_length(x) << "\"];\n";
  }
  for (const auto& [lo, hi] : h.edges)
    out << "  \"" << element_id(h.nodes[lo]) << "\" -> \"" << element_id(h.nodes[hi]) << "\";\n";
  out << "}\n";
  return out.str();
}

inline Json to_json(const HasseDiagram& h) {
  Json nodes = Json::array();
  for (const auto& x : h.nodes) {
    Json n;
    n["id"] = element_id(x);
    n["x0"] = x.x0.coords();
    n["w"] = x.w.images();
    n["length"] = im_length(x);
    nodes.push_back(std::move(n));
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : h.edges) edges.push_back(Json::array({lo, hi}));
  Json j;
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j;
}

// ---------------------------------------------------------------------------
// Verification reports

inline Json to_json(const ReportValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

inline std::string to_text(const ReportValue& v) {
  return std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>) return x;
        else return std::to_string(x);
      },
      v);
}

inline Json to_json(int g, const std::vector<StrataReport>& reports) {
  Json checks = Json::array();
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      Json j;
      j["name"] = c.name;
      j["prank"] = c.prank ? Json(*c.prank) : Json(nullptr);
      j["expected"] = to_json(c.expected);
      j["actual"] = to_json(c.actual);
      j["pass"] = c.pass;
      j["counterexamples"] = c.counterexamples;
      checks.push_back(std::move(j));
    }
  Json out;
  out["g"] = g;
  out["checks"] = std::move(checks);
  return out;
}

/// One line per check; failing checks are followed by their counterexamples.
inline std::string to_table(const std::vector<StrataReport>& reports) {
  std::ostringstream out;
  out << "check                        prank  expected  actual  verdict\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks) {
      std::string name = c.name;
      name.resize(std::max<std::size_t>(name.size(), 28), ' ');
      std::string prank = c.prank ? std::to_string(*c.prank) : "-";
      prank.resize(std::max<std::size_t>(prank.size(), 5), ' ');
      std::string expected = to_text(c.expected);
      expected.resize(std::max<std::size_t>(expected.size(), 8), ' ');
      std::string actual = to_text(c.actual);
      actual.resize(std::max<std::size_t>(actual.size(), 6), ' ');
      out << name << " " << prank << "  " << expected << "  " << actual << "  " << (c.pass ? "PASS" : "FAIL") << "\n";
      if (!c.pass)
        for (const auto& cx : c.counterexamples) out << "    counterexample: " << cx << "\n";
    }
  return out.str();
}

} // namespace krs

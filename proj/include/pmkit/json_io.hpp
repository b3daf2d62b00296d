/* Copyright 2026 The pmkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pmkit/analysis.hpp"
#include "pmkit/catalog.hpp"
#include "pmkit/core.hpp"
#include "pmkit/errors.hpp"
#include "pmkit/facts.hpp"
#include "pmkit/fixedpoint.hpp"
#include "pmkit/map.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/sequence.hpp"
#include "pmkit/space.hpp"
#include "pmkit/topology.hpp"

namespace pmkit {

using Json = nlohmann::ordered_json;

// Parsing ------------------------------------------------------------------------

/// Parses JSON text; syntax errors become StructuralError naming the source
/// and the line and column.
inline Json parse_json_text(const std::string& text, const std::string& source = "<input>") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') ++line, col = 1;
      else ++col;
    }
    throw StructuralError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                          ": malformed JSON");
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

namespace json_detail {

inline const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw StructuralError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw StructuralError(where + ": missing \"" + key + "\"");
  return *it;
}

inline std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) throw StructuralError(where + ": expected a string");
  return j.get<std::string>();
}

inline Point as_point(const Json& j, const std::string& where) {
  try {
    return parse_point(as_string(j, where));
  } catch (const StructuralError&) {
    throw;
  } catch (const Error& e) {
    throw StructuralError(where + ": " + e.what());
  }
}

inline Rational as_rational(const Json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    return Rational::parse(as_string(j, where));
  } catch (const StructuralError&) {
    throw;
  } catch (const Error& e) {
    throw StructuralError(where + ": " + e.what());
  }
}

}  // namespace json_detail

/// {"points": [ids], "p": [["num/den", ...], ...]}. Integer entries are
/// accepted on input; output always uses "num/den" strings.
inline FinitePMSpace finite_space_from_json(const Json& j, const std::string& source = "<input>") {
  using namespace json_detail;
  const Json& pts = member(j, "points", source);
  if (!pts.is_array()) throw StructuralError(source + ": \"points\" must be an array");
  std::vector<Point> points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    points.push_back(as_point(pts[i], source + ": points[" + std::to_string(i) + "]"));
  const Json& rows = member(j, "p", source);
  if (!rows.is_array()) throw StructuralError(source + ": \"p\" must be an array");
  std::vector<std::vector<Rational>> m;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const std::string where = source + ": p[" + std::to_string(r) + "]";
    if (!rows[r].is_array()) throw StructuralError(where + ": expected an array");
    std::vector<Rational> row;
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      row.push_back(as_rational(rows[r][c], where + "[" + std::to_string(c) + "]"));
    m.push_back(std::move(row));
  }
  try {
    return FinitePMSpace(std::move(points), std::move(m));
  } catch (const StructuralError& e) {
    throw StructuralError(source + ": " + e.what());
  }
}

inline Json to_json(const FinitePMSpace& s) {
  Json pts = Json::array();
  for (const auto& p : s.points()) pts.push_back(to_string(p));
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.size(); ++j) row.push_back(s.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return Json{{"points", std::move(pts)}, {"p", std::move(rows)}};
}

/// {"explicit": [ids], "cycle_start": k} or {"generator": id, "horizon": N}.
inline SequenceSpec sequence_from_json(const Json& j, const Catalog& c,
                                       std::size_t default_horizon,
                                       const std::string& source = "<input>") {
  using namespace json_detail;
  if (!j.is_object()) throw StructuralError(source + ": expected an object");
  if (j.contains("explicit")) {
    const Json& xs = j.at("explicit");
    if (!xs.is_array()) throw StructuralError(source + ": \"explicit\" must be an array");
    std::vector<Point> terms;
    for (std::size_t i = 0; i < xs.size(); ++i)
      terms.push_back(as_point(xs[i], source + ": explicit[" + std::to_string(i) + "]"));
    std::size_t cycle = 1;
    if (j.contains("cycle_start")) {
      if (!j.at("cycle_start").is_number_unsigned())
        throw StructuralError(source + ": \"cycle_start\" must be a positive integer");
      cycle = j.at("cycle_start").get<std::size_t>();
    }
    return SequenceSpec::explicit_list(std::move(terms), cycle);
  }
  if (j.contains("generator")) {
    std::size_t horizon = default_horizon;
    if (j.contains("horizon")) {
      if (!j.at("horizon").is_number_unsigned())
        throw StructuralError(source + ": \"horizon\" must be a positive integer");
      horizon = j.at("horizon").get<std::size_t>();
    }
    return c.sequence(as_string(j.at("generator"), source + ": generator"), horizon);
  }
  throw StructuralError(source + ": expected \"explicit\" or \"generator\"");
}

/// {"name": "...", "table": {"x": "T(x)", ...}}.
inline MapSpec map_from_json(const Json& j, const std::string& source = "<input>") {
  using namespace json_detail;
  const Json& table = member(j, "table", source);
  if (!table.is_object()) throw StructuralError(source + ": \"table\" must be an object");
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& [k, v] : table.items()) {
    const std::string where = source + ": table[\"" + k + "\"]";
    Point x;
    try {
      x = parse_point(k);
    } catch (const Error& e) {
      throw StructuralError(where + ": " + e.what());
    }
    pairs.emplace_back(std::move(x), as_point(v, where));
  }
  std::string name = j.contains("name") ? as_string(j.at("name"), source + ": name") : source;
  return MapSpec::from_table(std::move(name), std::move(pairs));
}

// Reports ------------------------------------------------------------------------

namespace json_detail {

inline Json points(const std::vector<Point>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

inline Json opt_point(const std::optional<Point>& p) {
  return p ? Json(to_string(*p)) : Json(nullptr);
}

inline Json opt_rational(const std::optional<Rational>& r) {
  return r ? Json(r->to_string()) : Json(nullptr);
}

}  // namespace json_detail

inline Json to_json(const AxiomReport& r) {
  Json j{{"verdict", r.pass ? "pass" : "fail"},
         {"violated_axiom", r.violated ? Json(axiom_name(*r.violated)) : Json(nullptr)}};
  Json w = Json::array();
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    w.push_back(Json{{"index", r.indices[i]}, {"point", to_string(r.witness[i])}});
  j["witness"] = std::move(w);
  Json v = Json::array();
  for (const auto& x : r.values) v.push_back(x.to_string());
  j["values"] = std::move(v);
  return j;
}

inline Json to_json(const ConvergenceReport& r) {
  Json j{{"mode", mode_name(r.mode)},
         {"target", to_string(r.target)},
         {"tail_start", r.tail_start},
         {"achieved_gap", r.achieved_gap.to_string()},
         {"tol", r.tol.to_string()},
         {"horizon", r.horizon},
         {"exact", r.exact}};
  if (r.witness)
    j["witness"] = Json{{"kind", gap_kind_name(r.witness->kind)},
                        {"index", r.witness->index},
                        {"gap", r.witness->gap.to_string()}};
  else
    j["witness"] = nullptr;
  return j;
}

inline Json to_json(const CauchyReport& r) {
  Json j{{"verdict", cauchy_name(r.verdict)},
         {"limit", json_detail::opt_rational(r.limit)},
         {"tail_start", r.tail_start},
         {"spread", r.spread.to_string()},
         {"tol", r.tol.to_string()},
         {"horizon", r.horizon},
         {"exact", r.exact}};
  if (r.witness)
    j["witness"] = Json{{"low", {{"n", r.witness->low_n}, {"m", r.witness->low_m},
                                 {"value", r.witness->low.to_string()}}},
                        {"high", {{"n", r.witness->high_n}, {"m", r.witness->high_m},
                                  {"value", r.witness->high.to_string()}}}};
  else
    j["witness"] = nullptr;
  return j;
}

inline Json to_json(const SeparationReport& r) {
  return Json{{"t0", r.t0}, {"t1", r.t1}, {"hausdorff", r.hausdorff}};
}

inline Json to_json(const GdeltaReport& r) {
  Json off = Json::array();
  for (const auto& [x, y] : r.off_diagonal) off.push_back(Json::array({to_string(x), to_string(y)}));
  return Json{{"t1", r.t1},
              {"stabilization_n", r.stabilization_n},
              {"equals_diagonal", r.equals_diagonal},
              {"min_gap", json_detail::opt_rational(r.min_gap)},
              {"off_diagonal", std::move(off)}};
}

inline Json to_json(const FinitePMSpace& s, const Relation& rel) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = 0; j < rel.size(); ++j)
      if (rel(i, j)) pairs.push_back(Json::array({to_string(s.point(i)), to_string(s.point(j))}));
  return Json{{"points", json_detail::points(s.points())},
              {"above", std::move(pairs)},
              {"reflexive", rel.reflexive()},
              {"antisymmetric", rel.antisymmetric()},
              {"transitive", rel.transitive()}};
}

inline Json to_json(const MaximalPointsReport& r) {
  return Json{{"maximal", json_detail::points(r.maximal)},
              {"cover_verified", r.cover_verified},
              {"radii_checked", r.radii_checked}};
}

inline Json to_json(const CoverReport& r) {
  return Json{{"covers", r.covers}, {"uncovered", json_detail::opt_point(r.uncovered)}};
}

inline Json to_json(const NetReport& r) {
  return Json{{"net", json_detail::points(r.net)}, {"size", r.size()}};
}

inline Json to_json(const SubsequenceWitness& w) {
  return Json{{"kind", w.kind == SubsequenceWitness::Kind::whole_sequence ? "whole_sequence"
                                                                          : "constant_subsequence"},
              {"indices", w.indices},
              {"limit", to_string(w.limit)},
              {"exact", w.exact}};
}

inline Json to_json(const ConditionReport& r) {
  Json j{{"condition", r.condition.describe()},
         {"kind", condition_name(r.condition.kind)},
         {"verdict", r.holds ? "holds_on_sample" : "violated"},
         {"pairs_checked", r.pairs_checked},
         {"exhaustive", r.exhaustive}};
  if (r.violation)
    j["violation"] = Json{{"x", to_string(r.violation->x)},
                          {"y", to_string(r.violation->y)},
                          {"lhs", r.violation->lhs.to_string()},
                          {"rhs", r.violation->rhs.to_string()}};
  else
    j["violation"] = nullptr;
  return j;
}

inline Json to_json(const IterationTrace& t) {
  Json pn = Json::array(), ps = Json::array();
  for (const auto& v : t.p_next) pn.push_back(v.to_string());
  for (const auto& v : t.p_self) ps.push_back(v.to_string());
  return Json{{"start", to_string(t.start)},
              {"outcome", outcome_name(t.outcome)},
              {"fixed_point", json_detail::opt_point(t.fixed_point)},
              {"exact", t.exact},
              {"cauchy_value", json_detail::opt_rational(t.cauchy_value)},
              {"steps", t.steps},
              {"iterates", json_detail::points(t.iterates)},
              {"p_next", std::move(pn)},
              {"p_self", std::move(ps)}};
}

inline const char* status_name(BottomSolveResult::Status s) {
  switch (s) {
    case BottomSolveResult::Status::solved: return "solved";
    case BottomSolveResult::Status::contradiction: return "contradiction";
    case BottomSolveResult::Status::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

inline Json to_json(const BottomSolveResult& r) {
  Json j{{"status", status_name(r.status)},
         {"fixed_point", json_detail::opt_point(r.fixed_point)},
         {"exact", r.exact},
         {"steps", r.steps},
         {"exhaustive", r.exhaustive},
         {"bottom_checked", json_detail::points(r.bottom_checked)},
         {"reduction_holds", r.reduction_holds},
         {"fixed_points_in_bottom", r.fixed_points_in_bottom},
         {"unique_in_bottom", r.unique_in_bottom}};
  if (r.reduction_violation)
    j["reduction_violation"] = Json::array(
        {to_string(r.reduction_violation->first), to_string(r.reduction_violation->second)});
  if (r.escaping)
    j["escape"] = Json{{"point", to_string(*r.escaping)}, {"image", to_string(*r.escaped_image)}};
  if (r.witness_search) j["witness_search"] = to_json(*r.witness_search);
  return j;
}

inline Json to_json(const ConstantMapBottomReport& r) {
  return Json{{"points", json_detail::points(r.points)}, {"equals_bottom", r.equals_bottom}};
}

inline Json to_json(const FinitePMSpace& s, const std::vector<MapTable>& maps) {
  Json out = Json::array();
  for (const auto& m : maps) {
    Json table = Json::object();
    for (std::size_t i = 0; i < m.image.size(); ++i)
      table[to_string(s.point(i))] = to_string(s.point(m.image[i]));
    out.push_back(std::move(table));
  }
  return out;
}

inline Json to_json(const FactSuiteResult& r) {
  Json facts = Json::array();
  for (const auto& f : r.results)
    facts.push_back(Json{{"id", f.id},
                         {"entry", f.entry},
                         {"claim", f.claim},
                         {"verdict", f.pass ? "pass" : "fail"},
                         {"details", f.details}});
  return Json{{"verdict", r.pass() ? "pass" : "fail"},
              {"passed", r.passed},
              {"failed", r.failed},
              {"facts", std::move(facts)}};
}

}  // namespace pmkit

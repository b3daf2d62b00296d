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

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pmkit/errors.hpp"
#include "pmkit/point.hpp"
#include "pmkit/space.hpp"

namespace pmkit {

/// A deterministic self-map T of a space.
class MapSpec {
 public:
  using Fn = std::function<Point(const Point&)>;

  MapSpec(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {
    if (!fn_) throw ArgumentError("map '" + name_ + "' has no function");
  }

  static MapSpec identity() {
    return MapSpec("identity", [](const Point& x) { return x; });
  }

  /// T_z(x) = z.
  static MapSpec constant(Point z) {
    std::string name = "const." + to_string(z);
    return MapSpec(std::move(name), [z = std::move(z)](const Point&) { return z; });
  }

  /// Table-backed map; applying it outside the table is a domain error.
  static MapSpec from_table(std::string name, std::vector<std::pair<Point, Point>> table) {
    std::map<Point, Point> m;
    for (auto& [x, y] : table)
      if (!m.emplace(x, y).second)
        throw StructuralError("map table lists '" + to_string(x) + "' twice");
    return MapSpec(std::move(name), [m = std::move(m)](const Point& x) {
      auto it = m.find(x);
      if (it == m.end()) throw DomainError("map table has no entry for '" + to_string(x) + "'");
      return it->second;
    });
  }

  /// Table over a finite space: point i goes to point image[i].
  static MapSpec from_indices(const FinitePMSpace& s, const std::vector<std::size_t>& image) {
    if (image.size() != s.size()) throw StructuralError("map table size does not match the space");
    std::vector<std::pair<Point, Point>> table;
    std::string name = "table[";
    for (std::size_t i = 0; i < image.size(); ++i) {
      table.emplace_back(s.point(i), s.point(image.at(i)));
      if (i) name += ",";
      name += to_string(s.point(image[i]));
    }
    return from_table(name + "]", std::move(table));
  }

  const std::string& name() const { return name_; }
  Point operator()(const Point& x) const { return fn_(x); }
  Point apply(const Point& x) const { return fn_(x); }

 private:
  std::string name_;
  Fn fn_;
};

/// T(x), refusing images that leave the space.
template <PartialMetricSpace S>
Point apply_in(const S& s, const MapSpec& T, const Point& x) {
  Point y = T(x);
  if (!s.contains(y))
    throw MapClosureError("map '" + T.name() + "' sends '" + to_string(x) + "' to '" +
                          to_string(y) + "', outside the space");
  return y;
}

/// Points of `pts` whose image leaves the space.
template <PartialMetricSpace S>
std::vector<Point> closure_failures(const S& s, const MapSpec& T, const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const auto& x : pts)
    if (!s.contains(T(x))) out.push_back(x);
  return out;
}

}  // namespace pmkit

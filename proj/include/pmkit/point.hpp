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

#include <bit>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pmkit/errors.hpp"
#include "pmkit/rational.hpp"

namespace pmkit {

/// A finite subset of the ground alphabet {a, ..., z}, stored as a bitmask
/// (bit i <-> letter 'a' + i). Text form "{a,c}"; the empty set is "{}".
struct SetMask {
  std::uint32_t bits = 0;

  int size() const { return std::popcount(bits); }
  SetMask operator|(SetMask o) const { return {bits | o.bits}; }
  friend auto operator<=>(const SetMask&, const SetMask&) = default;
};

/// A symbolic point such as "a" or "x3".
struct Tag {
  std::string name;
  friend auto operator<=>(const Tag&, const Tag&) = default;
};

/// Identifier of a domain element. Equality is structural and therefore
/// decidable; rational points are canonical, so 2/4 and 1/2 are the same
/// point.
using Point = std::variant<Rational, SetMask, Tag>;

inline std::string to_string(const Point& p) {
  if (auto* r = std::get_if<Rational>(&p)) return r->to_string();
  if (auto* m = std::get_if<SetMask>(&p)) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 26; ++i) {
      if (m->bits & (1u << i)) {
        if (!first) s += ',';
        s += static_cast<char>('a' + i);
        first = false;
      }
    }
    return s + "}";
  }
  return std::get<Tag>(p).name;
}

inline Point parse_set(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ArgumentError("malformed set point '" + std::string(text) + "'");
  SetMask m;
  std::string_view body = text.substr(1, text.size() - 2);
  std::size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (c < 'a' || c > 'z')
      throw ArgumentError("set points use letters a-z: '" + std::string(text) + "'");
    m.bits |= 1u << (c - 'a');
    ++i;
    if (i < body.size()) {
      if (body[i] != ',') throw ArgumentError("malformed set point '" + std::string(text) + "'");
      ++i;
      if (i == body.size()) throw ArgumentError("malformed set point '" + std::string(text) + "'");
    }
  }
  return m;
}

/// Inverse of to_string: "{...}" is a set, anything that reads as a
/// rational is a rational, any other non-empty token is a tag.
inline Point parse_point(std::string_view text) {
  if (text.empty()) throw ArgumentError("empty point identifier");
  if (text.front() == '{') return parse_set(text);
  char c = text.front();
  if ((c >= '0' && c <= '9') || c == '-' || c == '+') return Rational::parse(text);
  for (char ch : text) {
    if (ch == '/' || ch == '{' || ch == '}' || ch == ',' || ch == ' ' || ch == '"')
      throw ArgumentError("malformed point identifier '" + std::string(text) + "'");
  }
  return Tag{std::string(text)};
}

inline Point tag(std::string name) { return Tag{std::move(name)}; }

/// Convenience for set points: set_of("ab") == {a,b}.
inline Point set_of(std::string_view letters) {
  SetMask m;
  for (char c : letters) {
    if (c < 'a' || c > 'z') throw ArgumentError("set letters must be a-z");
    m.bits |= 1u << (c - 'a');
  }
  return m;
}

inline std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }

inline std::vector<std::string> to_strings(const std::vector<Point>& pts) {
  std::vector<std::string> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

}  // namespace pmkit

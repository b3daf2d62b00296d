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
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pmkit/errors.hpp"
#include "pmkit/map.hpp"
#include "pmkit/point.hpp"
#include "pmkit/rational.hpp"
#include "pmkit/sequence.hpp"
#include "pmkit/space.hpp"

namespace pmkit {

namespace catalog_detail {

inline const Rational* as_rational(const Point& p) { return std::get_if<Rational>(&p); }

inline const Rational& require_rational(const Point& p, const char* where) {
  auto* r = as_rational(p);
  if (!r) throw DomainError(std::string(where) + ": '" + to_string(p) + "' is not a number");
  return *r;
}

inline Rational q(long long n, long long d = 1) { return Rational(n, d); }

inline std::vector<Point> rationals(std::initializer_list<Rational> xs) {
  return {xs.begin(), xs.end()};
}

// Uniform rationals num/den in an interval, den <= max_den.
inline std::vector<Point> sample_interval(std::uint64_t seed, std::size_t count, Rational lo,
                                          bool lo_open, Rational hi, bool hi_open,
                                          long long max_den = 64) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> den_d(1, max_den);
  std::vector<Point> out;
  while (out.size() < count) {
    long long den = den_d(rng);
    BigInt lo_n = (lo * Rational(den)).ceil();
    BigInt hi_n = (hi * Rational(den)).floor();
    if (hi_n < lo_n) continue;
    std::uniform_int_distribution<long long> num_d(static_cast<long long>(lo_n),
                                                   static_cast<long long>(hi_n));
    Rational x(num_d(rng), den);
    if ((lo_open && x == lo) || (hi_open && x == hi)) continue;
    out.push_back(x);
  }
  return out;
}

inline bool in_unit_interval(const Point& p, bool lo_open, bool hi_open) {
  auto* r = as_rational(p);
  if (!r) return false;
  bool above = lo_open ? r->sign() > 0 : r->sign() >= 0;
  bool below = hi_open ? *r < Rational(1) : *r <= Rational(1);
  return above && below;
}

}  // namespace catalog_detail

// Spaces -------------------------------------------------------------------------

/// (0, 1) with p(x, y) = 1 + max{x, y}.
inline CatalogSpace space_ex3_1() {
  using namespace catalog_detail;
  return CatalogSpace({
      "ex3.1",
      "(0,1), p(x,y) = 1 + max{x,y}",
      [](const Point& x, const Point& y) {
        return Rational(1) + std::max(require_rational(x, "ex3.1"), require_rational(y, "ex3.1"));
      },
      [](const Point& x) { return in_unit_interval(x, true, true); },
      Rational(1),
      DeclaredBottom::none(),
      [](std::uint64_t seed, std::size_t count) {
        return sample_interval(seed, count, Rational(0), true, Rational(1), true);
      },
      rationals({q(1, 4), q(1, 3), q(1, 2), q(2, 3), q(3, 4)}),
  });
}

/// Subsets of {a, b, c} with p(x, y) = |x u y|.
inline CatalogSpace space_ex3_2() {
  std::vector<Point> all;
  for (std::uint32_t m = 0; m < 8; ++m) all.push_back(SetMask{m});
  return CatalogSpace({
      "ex3.2",
      "subsets of {a,b,c}, p(x,y) = |x u y|",
      [](const Point& x, const Point& y) {
        return Rational((std::get<SetMask>(x) | std::get<SetMask>(y)).size());
      },
      [](const Point& x) {
        auto* m = std::get_if<SetMask>(&x);
        return m && m->bits < 8;
      },
      Rational(0),
      DeclaredBottom::finite({SetMask{0}}),
      [](std::uint64_t seed, std::size_t count) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> d(0, 7);
        std::vector<Point> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(SetMask{d(rng)});
        return out;
      },
      all,
  });
}

namespace catalog_detail {

inline bool ex3_4_domain(const Point& p) {
  auto* r = as_rational(p);
  if (!r) return false;
  return r->sign() >= 0 || *r == Rational(-7) || *r == Rational(-6) || *r == Rational(-5);
}

inline Rational ex3_4_f(const Rational& x) {
  if (x.sign() >= 0) return Rational(3) + x;
  if (x == Rational(-5)) return Rational(0);
  return Rational(1);
}

// x = 1/(2q) for some positive integer q: numerator 1, even denominator.
inline bool is_inverse_even(const Rational& x) {
  return x.numerator() == 1 && x.denominator() % 2 == 0;
}

}  // namespace catalog_detail

/// {-7, -6, -5} u [0, oo) with p(x, y) = (|x - y| + f(x) + f(y)) / 2.
inline CatalogSpace space_ex3_4() {
  using namespace catalog_detail;
  return CatalogSpace({
      "ex3.4",
      "{-7,-6,-5} u [0,oo), p(x,y) = (|x-y| + f(x) + f(y))/2",
      [](const Point& x, const Point& y) {
        const Rational& a = require_rational(x, "ex3.4");
        const Rational& b = require_rational(y, "ex3.4");
        return (abs(a - b) + ex3_4_f(a) + ex3_4_f(b)) / Rational(2);
      },
      ex3_4_domain,
      Rational(0),
      DeclaredBottom::finite({Rational(-5)}),
      [](std::uint64_t seed, std::size_t count) {
        auto out = sample_interval(seed, count, Rational(0), false, Rational(8), false, 24);
        std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
        for (auto& x : out)
          if (std::uniform_int_distribution<int>(0, 5)(rng) == 0)
            x = Rational(-7 + std::uniform_int_distribution<int>(0, 2)(rng));
        return out;
      },
      rationals({q(-7), q(-6), q(-5), q(0), q(1, 2), q(1, 3), q(1, 4), q(1), q(2)}),
  });
}

/// (0, 1] with p(x, y) = max{x, y}.
inline CatalogSpace space_ex4_4() {
  using namespace catalog_detail;
  return CatalogSpace({
      "ex4.4",
      "(0,1], p(x,y) = max{x,y}",
      [](const Point& x, const Point& y) {
        return std::max(require_rational(x, "ex4.4"), require_rational(y, "ex4.4"));
      },
      [](const Point& x) { return in_unit_interval(x, true, false); },
      Rational(0),
      DeclaredBottom::none(),
      [](std::uint64_t seed, std::size_t count) {
        return sample_interval(seed, count, Rational(0), true, Rational(1), false);
      },
      rationals({q(1, 10), q(1, 4), q(1, 3), q(1, 2), q(3, 4), q(1)}),
  });
}

namespace catalog_detail {

inline bool is_natural_or_zero(const Point& p) {
  auto* r = as_rational(p);
  return r && r->is_integer() && r->sign() >= 0;
}

}  // namespace catalog_detail

/// {0} u N with p(n, m) = 1 + 1/n + 1/m off the diagonal (1/0 read as 0)
/// and p(n, n) = 1.
inline CatalogSpace space_ex4_8() {
  using namespace catalog_detail;
  std::vector<Point> sample;
  for (int i = 0; i <= 10; ++i) sample.push_back(Rational(i));
  return CatalogSpace({
      "ex4.8",
      "{0} u N, p(n,m) = 1 + 1/n + 1/m (n != m), p(n,n) = 1",
      [](const Point& x, const Point& y) {
        const Rational& n = require_rational(x, "ex4.8");
        const Rational& m = require_rational(y, "ex4.8");
        if (n == m) return Rational(1);
        Rational v(1);
        if (n.sign() > 0) v += Rational(1) / n;
        if (m.sign() > 0) v += Rational(1) / m;
        return v;
      },
      is_natural_or_zero,
      Rational(1),
      DeclaredBottom::everything(),
      [](std::uint64_t seed, std::size_t count) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long long> d(0, 1000);
        std::vector<Point> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(Rational(d(rng)));
        return out;
      },
      sample,
  });
}

namespace catalog_detail {

inline bool ex5_4_lower(const Rational& x) { return x.sign() >= 0 && x <= Rational(1); }
inline bool ex5_4_upper(const Rational& x) { return Rational(2) <= x && x <= Rational(3); }

}  // namespace catalog_detail

/// [0, 1] u [2, 3] with p = |x - y| on [0, 1]^2 and max{x, y} otherwise.
inline CatalogSpace space_ex5_4() {
  using namespace catalog_detail;
  return CatalogSpace({
      "ex5.4",
      "[0,1] u [2,3], p = |x-y| on [0,1], max{x,y} if either point is in [2,3]",
      [](const Point& x, const Point& y) {
        const Rational& a = require_rational(x, "ex5.4");
        const Rational& b = require_rational(y, "ex5.4");
        if (ex5_4_upper(a) || ex5_4_upper(b)) return std::max(a, b);
        return abs(a - b);
      },
      [](const Point& x) {
        auto* r = as_rational(x);
        return r && (ex5_4_lower(*r) || ex5_4_upper(*r));
      },
      Rational(0),
      DeclaredBottom::interval(Rational(0), false, Rational(1), false),
      [](std::uint64_t seed, std::size_t count) {
        auto out = sample_interval(seed, count, Rational(0), false, Rational(2), false);
        for (auto& x : out) {
          Rational& r = std::get<Rational>(x);
          if (Rational(1) < r) r += Rational(1);  // (1, 2] -> (2, 3]
        }
        return out;
      },
      rationals({q(0), q(1, 2), q(3, 4), q(1), q(2), q(9, 4), q(5, 2), q(3)}),
  });
}

/// [0, 1] with p(x, x) = 0 for x > 0, p(0, 0) = 1 and p = 1 off the diagonal.
inline CatalogSpace space_ex5_5() {
  using namespace catalog_detail;
  return CatalogSpace({
      "ex5.5",
      "[0,1], p(x,x) = 0 for x > 0, p = 1 otherwise",
      [](const Point& x, const Point& y) {
        const Rational& a = require_rational(x, "ex5.5");
        const Rational& b = require_rational(y, "ex5.5");
        return (a == b && a.sign() > 0) ? Rational(0) : Rational(1);
      },
      [](const Point& x) { return in_unit_interval(x, false, false); },
      Rational(0),
      DeclaredBottom::interval(Rational(0), true, Rational(1), false),
      [](std::uint64_t seed, std::size_t count) {
        return sample_interval(seed, count, Rational(0), false, Rational(1), false);
      },
      rationals({q(0), q(1, 2), q(1, 3), q(1)}),
  });
}

namespace catalog_detail {

inline bool ex5_6_domain(const Point& p) {
  auto* r = as_rational(p);
  if (!r) return false;
  return r->sign() == 0 || (r->numerator() == 1 && r->denominator() >= 2);
}

}  // namespace catalog_detail

/// {1/(q+1) : q in N} u {0} with p(x, x) = x for x > 0 and p = 1 otherwise.
/// The infimum 0 of self-distances is not attained, so the bottom set is
/// empty.
inline CatalogSpace space_ex5_6() {
  using namespace catalog_detail;
  return CatalogSpace({
      "ex5.6",
      "{1/(q+1)} u {0}, p(x,x) = x for x > 0, p = 1 otherwise",
      [](const Point& x, const Point& y) {
        const Rational& a = require_rational(x, "ex5.6");
        const Rational& b = require_rational(y, "ex5.6");
        return (a == b && a.sign() > 0) ? a : Rational(1);
      },
      ex5_6_domain,
      Rational(0),
      DeclaredBottom::none(),
      [](std::uint64_t seed, std::size_t count) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long long> d(1, 1000000);
        std::vector<Point> out;
        for (std::size_t i = 0; i < count; ++i)
          out.push_back(i % 16 == 15 ? Rational(0) : Rational(1, d(rng) + 1));
        return out;
      },
      rationals({q(0), q(1, 2), q(1, 3), q(1, 4)}),
  });
}

/// Two points with p(a, a) = 0, p(b, b) = 1, p(a, b) = 2.
inline CatalogSpace space_ex5_8() {
  return CatalogSpace({
      "ex5.8",
      "{a,b}, p(a,a) = 0, p(b,b) = 1, p(a,b) = 2",
      [](const Point& x, const Point& y) {
        const auto& a = std::get<Tag>(x).name;
        const auto& b = std::get<Tag>(y).name;
        if (a != b) return Rational(2);
        return a == "a" ? Rational(0) : Rational(1);
      },
      [](const Point& x) {
        auto* t = std::get_if<Tag>(&x);
        return t && (t->name == "a" || t->name == "b");
      },
      Rational(0),
      DeclaredBottom::finite({Tag{"a"}}),
      [](std::uint64_t seed, std::size_t count) {
        std::vector<Point> out;
        for (std::size_t i = 0; i < count; ++i)
          out.push_back(Tag{((seed + i) % 2) ? "b" : "a"});
        return out;
      },
      {Tag{"a"}, Tag{"b"}},
  });
}

namespace catalog_detail {

inline bool is_apex_x(const Point& p) {
  auto* t = std::get_if<Tag>(&p);
  if (!t || t->name.size() < 2 || t->name[0] != 'x' || t->name[1] == '0') return false;
  for (std::size_t i = 1; i < t->name.size(); ++i)
    if (t->name[i] < '0' || t->name[i] > '9') return false;
  return true;
}

inline bool is_apex_top(const Point& p) {
  auto* t = std::get_if<Tag>(&p);
  return t && t->name == "a";
}

inline Rational apex_distance(const Point& x, const Point& y) {
  if (is_apex_top(x) || is_apex_top(y)) return Rational(2);
  return x == y ? Rational(0) : Rational(1);
}

inline std::vector<Point> apex_points(std::size_t k) {
  std::vector<Point> pts;
  for (std::size_t i = 1; i <= k; ++i) pts.push_back(Tag{"x" + std::to_string(i)});
  pts.push_back(Tag{"a"});
  return pts;
}

}  // namespace catalog_detail

/// Discrete metric space X = {x1, x2, ...} with an extra point a at
/// distance 2 from everything, itself included.
inline CatalogSpace space_apex() {
  using namespace catalog_detail;
  return CatalogSpace({
      "apex",
      "X u {a}, p = discrete metric on X, p(x,a) = p(a,a) = 2",
      apex_distance,
      [](const Point& x) { return is_apex_x(x) || is_apex_top(x); },
      Rational(0),
      DeclaredBottom::where("X", is_apex_x),
      [](std::uint64_t seed, std::size_t count) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<long long> d(1, 1000000);
        std::vector<Point> out;
        for (std::size_t i = 0; i < count; ++i) out.push_back(Tag{"x" + std::to_string(d(rng))});
        return out;
      },
      apex_points(4),
  });
}

/// Finite apex space on k points of X followed by a.
inline FinitePMSpace apex_space(std::size_t k) {
  using namespace catalog_detail;
  return FinitePMSpace::tabulate(apex_points(k), apex_distance);
}

// Maps ---------------------------------------------------------------------------

/// -5 on {-7, -6, -5, 0}, -7 on {1/(2q)}, -6 on the other positive reals.
inline MapSpec map_ex3_4() {
  using namespace catalog_detail;
  return MapSpec("ex3.4.T", [](const Point& p) -> Point {
    const Rational& x = require_rational(p, "ex3.4.T");
    if (!ex3_4_domain(p)) throw DomainError("ex3.4.T: '" + to_string(p) + "' outside the domain");
    if (x.sign() <= 0) return Rational(-5);
    if (is_inverse_even(x)) return Rational(-7);
    return Rational(-6);
  });
}

/// (x + 1)/2 on [0, 1], (2 + x)/2 on [2, 3].
inline MapSpec map_ex5_4() {
  using namespace catalog_detail;
  return MapSpec("ex5.4.T", [](const Point& p) -> Point {
    const Rational& x = require_rational(p, "ex5.4.T");
    if (ex5_4_lower(x)) return (x + Rational(1)) / Rational(2);
    if (ex5_4_upper(x)) return (Rational(2) + x) / Rational(2);
    throw DomainError("ex5.4.T: '" + to_string(p) + "' outside the domain");
  });
}

// Registry ---------------------------------------------------------------------------

/// Read-only registry of the example spaces, their maps and the named
/// sequence generators. Copies can swap maps (used to check that facts
/// depend on the maps they name).
class Catalog {
 public:
  static Catalog standard() {
    Catalog c;
    for (auto s : {space_ex3_1(), space_ex3_2(), space_ex3_4(), space_ex4_4(), space_ex4_8(),
                   space_ex5_4(), space_ex5_5(), space_ex5_6(), space_ex5_8(), space_apex()})
      c.add_space(std::move(s));
    c.set_map(map_ex3_4());
    c.set_map(map_ex5_4());
    for (const auto& name : {"ex3.4.T", "ex5.4.T"}) {
      const auto& sp = c.space(std::string(name).substr(0, 5));
      auto bad = closure_failures(sp, c.map(name), sp.canonical_sample());
      if (!bad.empty())
        throw InvariantViolation(std::string(name) + " leaves its space at '" +
                                 to_string(bad.front()) + "'");
    }
    return c;
  }

  void add_space(CatalogSpace s) {
    auto name = s.name();
    order_.push_back(name);
    spaces_.insert_or_assign(std::move(name), std::move(s));
  }
  void set_map(MapSpec m) {
    std::string name = m.name();
    set_map(std::move(name), std::move(m));
  }
  void set_map(std::string name, MapSpec m) { maps_.insert_or_assign(std::move(name), std::move(m)); }

  bool has_space(std::string_view name) const { return spaces_.count(std::string(name)) != 0; }

  const CatalogSpace& space(std::string_view name) const {
    auto it = spaces_.find(std::string(name));
    if (it == spaces_.end()) throw LookupError("unknown catalog space '" + std::string(name) + "'");
    return it->second;
  }

  /// Registered maps plus "identity" and "const.<point>".
  MapSpec map(std::string_view name) const {
    if (name == "identity") return MapSpec::identity();
    if (name.rfind("const.", 0) == 0) return MapSpec::constant(parse_point(name.substr(6)));
    auto it = maps_.find(std::string(name));
    if (it == maps_.end()) throw LookupError("unknown catalog map '" + std::string(name) + "'");
    return it->second;
  }

  std::vector<std::string> space_names() const { return order_; }
  std::vector<std::string> map_names() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : maps_) out.push_back(k);
    return out;
  }

  /// Named generators:
  ///   inverse                x_n = 1/n
  ///   natural                x_n = n
  ///   orbit:<map>:<x0>       x_n = T^n(x0)
  ///   image:<map>:<gen>      x_n = T(y_n) for the generator <gen>
  /// The image of `inverse` under ex3.4.T alternates -6, -7 and is declared
  /// periodic from n = 1 with period 2.
  SequenceSpec sequence(std::string_view id, std::size_t horizon) const {
    if (id == "inverse")
      return SequenceSpec::generator(
          "inverse", [](std::size_t n) -> Point { return Rational(1, static_cast<long long>(n)); },
          horizon, true);
    if (id == "natural")
      return SequenceSpec::generator(
          "natural", [](std::size_t n) -> Point { return Rational(static_cast<long long>(n)); },
          horizon, true);
    auto parts = split(id);
    if (parts.size() == 3 && parts[0] == "orbit") {
      MapSpec T = map(parts[1]);
      Point x0 = parse_point(parts[2]);
      auto cache = std::make_shared<OrbitCache>();
      cache->terms.push_back(x0);
      return SequenceSpec::generator(
          std::string(id),
          [T, cache](std::size_t n) {
            std::lock_guard<std::mutex> lock(cache->mu);
            while (cache->terms.size() <= n) cache->terms.push_back(T(cache->terms.back()));
            return cache->terms[n];
          },
          horizon);
    }
    if (parts.size() >= 3 && parts[0] == "image") {
      std::string inner = join(parts, 2);
      MapSpec T = map(parts[1]);
      std::optional<Periodicity> declared;
      if (parts[1] == "ex3.4.T" && inner == "inverse") declared = Periodicity{1, 2};
      return sequence(inner, horizon).transformed(std::string(id), T, declared);
    }
    throw LookupError("unknown sequence generator '" + std::string(id) + "'");
  }

 private:
  struct OrbitCache {
    std::mutex mu;
    std::vector<Point> terms;
  };

  static std::vector<std::string> split(std::string_view s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      auto pos = s.find(':', start);
      out.emplace_back(s.substr(start, pos - start));
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    return out;
  }
  static std::string join(const std::vector<std::string>& parts, std::size_t from) {
    std::string out;
    for (std::size_t i = from; i < parts.size(); ++i) {
      if (i > from) out += ':';
      out += parts[i];
    }
    return out;
  }

  std::vector<std::string> order_;
  std::map<std::string, CatalogSpace> spaces_;
  std::map<std::string, MapSpec> maps_;
};

/// Shared standard catalog.
inline const Catalog& standard_catalog() {
  static const Catalog c = Catalog::standard();
  return c;
}

inline const CatalogSpace& catalog_space(std::string_view name) {
  return standard_catalog().space(name);
}

inline MapSpec catalog_map(std::string_view name) { return standard_catalog().map(name); }

// Declaration checks ---------------------------------------------------------------

/// Problems found when checking a catalog space's declared metadata against
/// a list of its points: symmetry, p(x, x) >= declared rho, and
/// "x in declared bottom <=> p(x, x) = declared rho".
inline std::vector<std::string> validate_declarations(const CatalogSpace& s,
                                                      const std::vector<Point>& pts) {
  std::vector<std::string> problems;
  for (const auto& x : pts) {
    if (!s.contains(x)) {
      problems.push_back("'" + to_string(x) + "' outside the domain");
      continue;
    }
    for (const auto& y : pts)
      if (s.contains(y) && s.distance(x, y) != s.distance(y, x))
        problems.push_back("asymmetric at (" + to_string(x) + ", " + to_string(y) + ")");
    if (!s.declared_rho()) continue;
    const Rational pxx = s.distance(x, x);
    if (pxx < *s.declared_rho())
      problems.push_back("p(" + to_string(x) + "," + to_string(x) + ") = " + pxx.to_string() +
                         " below declared rho " + s.declared_rho()->to_string());
    const bool declared = s.in_declared_bottom(x);
    const bool attains = pxx == *s.declared_rho();
    if (declared != attains)
      problems.push_back("'" + to_string(x) + "' " +
                         (declared ? "declared in the bottom set but p(x,x) != rho"
                                   : "attains rho but is not declared in the bottom set"));
  }
  return problems;
}

}  // namespace pmkit

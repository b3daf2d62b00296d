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

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pmkit/errors.hpp"
#include "pmkit/point.hpp"

namespace pmkit {

/// x_{n + period} = x_n for every n >= offset (indices start at 1).
struct Periodicity {
  std::size_t offset = 1;
  std::size_t period = 1;
};

/// A sequence x_1, x_2, ... of points.
///
/// Explicit sequences are a literal list whose tail [cycle_start, end]
/// repeats forever, so they are eventually periodic by construction and
/// every analyzer decides them exactly. Generators compute x_n on demand;
/// they may declare an eventual period (checked over the horizon before use)
/// and may declare an exact tail, meaning the catalog knows the distance
/// gaps along the sequence are monotone, so a gap that stays above the
/// tolerance across the final window is persistent.
class SequenceSpec {
 public:
  using Term = std::function<Point(std::size_t)>;

  static SequenceSpec explicit_list(std::vector<Point> terms, std::size_t cycle_start = 1) {
    if (terms.empty()) throw ArgumentError("explicit sequence is empty");
    if (cycle_start < 1 || cycle_start > terms.size())
      throw ArgumentError("cycle_start must lie in [1, " + std::to_string(terms.size()) + "]");
    SequenceSpec s;
    s.name_ = "explicit";
    s.period_ = Periodicity{cycle_start, terms.size() - cycle_start + 1};
    s.horizon_ = terms.size();
    s.terms_ = std::move(terms);
    return s;
  }

  static SequenceSpec generator(std::string name, Term term, std::size_t default_horizon,
                                bool exact_tail = false,
                                std::optional<Periodicity> period = std::nullopt) {
    if (!term) throw ArgumentError("generator sequence without a term function");
    if (default_horizon == 0) throw ArgumentError("sequence horizon must be >= 1");
    if (period && (period->offset < 1 || period->period < 1))
      throw ArgumentError("declared period needs offset >= 1 and period >= 1");
    SequenceSpec s;
    s.name_ = std::move(name);
    s.term_ = std::move(term);
    s.horizon_ = default_horizon;
    s.exact_tail_ = exact_tail;
    s.period_ = period;
    return s;
  }

  /// x_n, n >= 1.
  Point at(std::size_t n) const {
    if (n == 0) throw ArgumentError("sequence indices start at 1");
    if (is_explicit()) {
      if (n > terms_.size()) n = period_->offset + (n - period_->offset) % period_->period;
      return terms_[n - 1];
    }
    return term_(n);
  }

  bool is_explicit() const { return !terms_.empty(); }
  const std::vector<Point>& explicit_terms() const { return terms_; }
  const std::optional<Periodicity>& periodicity() const { return period_; }
  bool exact_tail() const { return exact_tail_; }
  std::size_t default_horizon() const { return horizon_; }
  const std::string& name() const { return name_; }

  /// Last index needed to know the whole sequence when it is periodic.
  std::size_t determining_prefix() const {
    return period_ ? period_->offset + period_->period - 1 : horizon_;
  }

  /// Pointwise image (f(x_n)). The image of a periodic sequence is periodic
  /// with the same period; `exact_tail` is not inherited.
  SequenceSpec transformed(std::string name, std::function<Point(const Point&)> f,
                           std::optional<Periodicity> declared = std::nullopt) const {
    if (is_explicit()) {
      std::vector<Point> img;
      for (const auto& t : terms_) img.push_back(f(t));
      auto out = explicit_list(std::move(img), period_->offset);
      out.name_ = std::move(name);
      return out;
    }
    SequenceSpec base = *this;
    auto term = [base, f = std::move(f)](std::size_t n) { return f(base.at(n)); };
    return generator(std::move(name), term, horizon_, false, declared ? declared : period_);
  }

  /// Throws if a declared period is contradicted within the horizon.
  void verify_period(std::size_t horizon) const {
    if (!period_ || is_explicit()) return;
    const auto [offset, period] = *period_;
    for (std::size_t n = offset; n + period <= std::max(horizon, offset + 2 * period); ++n) {
      if (!(at(n) == at(n + period)))
        throw InvariantViolation("sequence '" + name_ + "' breaks its declared period " +
                                 std::to_string(period) + " at index " + std::to_string(n));
    }
  }

 private:
  SequenceSpec() = default;

  std::string name_;
  std::vector<Point> terms_;
  Term term_;
  std::size_t horizon_ = 1;
  bool exact_tail_ = false;
  std::optional<Periodicity> period_;
};

}  // namespace pmkit

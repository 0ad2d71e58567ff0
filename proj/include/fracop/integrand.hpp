// Copyright 2026 The fracop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <functional>
#include <span>
#include <string>

namespace fracop {

class MonotoneMap;

/// A point x together with the exact log-distance to a reference point:
/// offset = log Ψ(x) - log Ψ(ref). Quadrature rules know this difference to
/// full precision even when x itself rounds onto ref.
struct Site {
  double x;
  double ref;
  double offset;

  static Site at(double x) { return Site{x, x, 0.0}; }
};

/// A real function of one variable, optionally with its log-derivatives
/// D_y^j f, y = log Ψ(x), for one specific map Ψ.
class Integrand {
 public:
  /// Fills out[j] = D_y^j f(site) for j < out.size().
  using Evaluator = std::function<void(const Site&, std::span<double>)>;

  Integrand() = default;
  /// Values only.
  Integrand(std::function<double(double)> f, std::string tag = "custom");
  Integrand(Evaluator eval, int max_order, std::string map_key, std::string tag);

  double operator()(double x) const { return value(Site::at(x)); }
  double value(const Site& site) const;
  void evaluate(const Site& site, std::span<double> out) const;

  int max_order() const { return max_order_; }
  const std::string& map_key() const { return map_key_; }
  const std::string& tag() const { return tag_; }
  /// True when analytic log-derivatives up to order n exist for `map`.
  bool has_derivatives(const MonotoneMap& map, int n) const;
  explicit operator bool() const { return static_cast<bool>(eval_); }

 private:
  Evaluator eval_;
  int max_order_ = 0;
  std::string map_key_;
  std::string tag_ = "custom";
};

}  // namespace fracop

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

/// The monotone map Ψ and the operator δ^{Ψ,s} = Ψ^{-s}(Ψ/Ψ' d/dx)[Ψ^s ·].
///
/// Everything downstream works in the coordinate y = log Ψ(x), where δ^{Ψ,0}
/// is plain differentiation. The map therefore exposes log Ψ and its inverse
/// directly, plus an increment routine that computes log Ψ(x+d) - log Ψ(x)
/// without cancellation for small d.

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fracop {

struct Interval {
  double lo;
  double hi;
};

class Integrand;
struct Site;

class MonotoneMap {
 public:
  using Fn = std::function<double(double)>;

  /// Analytic description of a map. Fields left empty get generic fallbacks
  /// derived from `value` and `derivative`.
  struct Parts {
    Fn value;
    Fn derivative;
    Fn log_value;
    Fn inverse;
    Fn inverse_log;                                // y -> Ψ^{-1}(e^y)
    std::function<double(double, double)> log_increment;  // (x, d) -> logΨ(x+d) - logΨ(x)
    Fn dlog;                                       // Ψ'/Ψ
    Interval domain;
    std::string tag;
  };

  explicit MonotoneMap(Parts parts);

  /// A user-supplied map. The inverse is found by bisection on the domain,
  /// which must then be finite.
  static MonotoneMap custom(Fn value, Fn derivative, Interval domain,
                            std::string tag = "custom");

  double value(double x) const { return p_->value(x); }
  double derivative(double x) const { return p_->derivative(x); }
  double log_value(double x) const { return p_->log_value(x); }
  double inverse(double v) const { return p_->inverse(v); }
  double inverse_log(double y) const { return p_->inverse_log(y); }
  double log_increment(double x, double d) const {
    return p_->log_increment(x, d);
  }
  /// Ψ'(x)/Ψ(x), the Jacobian dy/dx.
  double dlog(double x) const { return p_->dlog(x); }
  Interval domain() const { return p_->domain; }
  bool contains(double x) const;
  const std::string& tag() const { return p_->tag; }
  /// Identity of the map used to match analytic derivatives to it.
  const std::string& key() const { return key_; }

 private:
  std::shared_ptr<const Parts> p_;
  std::string key_;
};

/// Catalogue maps: identity, exp, power (ρ), exp_power (ρ), sqrt.
MonotoneMap make_builtin(std::string_view tag, std::span<const double> params = {});

/// Parses the CLI form: "identity", "exp", "sqrt", "power:2", "exp_power:0.5".
MonotoneMap parse_map(std::string_view spec);

struct Violation {
  double x;
  std::string what;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks positivity, monotonicity, derivative consistency and the inverse
/// round trip on `grid_size` equispaced points of `interval`.
ValidationReport validate(const MonotoneMap& map, Interval interval, int grid_size);

struct DeltaOperatorSpec {
  MonotoneMap map;
  double s = 0.0;
  int n = 1;
};

/// Largest order differentiated numerically.
inline constexpr int kMaxNumericOrder = 4;

/// Derivatives d^j/dy^j h(y0 + o) at o = 0 for j = 0..n by central
/// differences with one Richardson step. Offsets are restricted to
/// [lo_offset, hi_offset]; the stencil shifts to one side near an edge.
std::vector<double> numeric_log_derivatives(const std::function<double(double)>& h,
                                            int n, double y0, double lo_offset,
                                            double hi_offset);

/// Log-derivatives D_y^j f for j = 0..n at a site, analytic when f carries
/// them for this map and numeric otherwise.
std::vector<double> log_derivatives(const MonotoneMap& map, const Integrand& f,
                                    const Site& site, int n,
                                    Interval window = {-1e308, 1e308});

/// δ^{Ψ,s,n} f = Σ_j C(n,j) s^{n-j} D_y^j f, given D_y^j f for j = 0..n.
double tempered_combination(std::span<const double> log_derivs, double s, int n);

/// δ^{Ψ,s,n} f(x). `window` limits where numeric stencils may sample.
double apply_delta(const DeltaOperatorSpec& spec, const Integrand& f, double x,
                   Interval window = {-1e308, 1e308});
double apply_delta(const DeltaOperatorSpec& spec, const Integrand& f,
                   const Site& site, Interval window = {-1e308, 1e308});

}  // namespace fracop

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

#include "fracop/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fracop/errors.hpp"
#include "fracop/limits.hpp"
#include "fracop/specialfn.hpp"

namespace fracop {
namespace {

constexpr int kNodes = 20;

struct Legendre {
  std::array<double, kNodes> x;  // on [0,1]
  std::array<double, kNodes> w;
};

// Gauss-Legendre nodes by Newton iteration on the three-term recurrence.
Legendre make_legendre() {
  Legendre r{};
  for (int i = 0; i < kNodes; ++i) {
    double t = std::cos(std::numbers::pi * (i + 0.75) / (kNodes + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= kNodes; ++k) {
        const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = kNodes * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= kNodes; ++k) {
      const double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = kNodes * (t * p1 - p0) / (t * t - 1.0);
    r.x[i] = 0.5 * (1.0 - t);
    r.w[i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
  return r;
}

const Legendre& legendre() {
  static const Legendre rule = make_legendre();
  return rule;
}

struct Sum {
  double value = 0.0;
  double magnitude = 0.0;
};

// Geometric panels [h/2^{k+1}, h/2^k] next to one end, k < depth, then the
// innermost panel under d = h_in v^q. `near` maps a distance from that end to
// a node.
void one_side(const std::function<double(GradedNode)>& g, double half, int depth, int q,
              const std::function<GradedNode(double)>& near, Sum& sum) {
  const auto& rule = legendre();
  for (int k = 0; k < depth; ++k) {
    const double hi = std::ldexp(half, -k);
    const double lo = 0.5 * hi;
    for (int i = 0; i < kNodes; ++i) {
      const double d = lo + (hi - lo) * rule.x[i];
      const double term = (hi - lo) * rule.w[i] * g(near(d));
      sum.value += term;
      sum.magnitude += std::abs(term);
    }
  }
  const double h = std::ldexp(half, -depth);
  for (int i = 0; i < kNodes; ++i) {
    const double v = rule.x[i];
    const double d = h * std::pow(v, q);
    if (d == 0.0) continue;
    const double term = h * q * std::pow(v, q - 1) * rule.w[i] * g(near(d));
    sum.value += term;
    sum.magnitude += std::abs(term);
  }
}

Sum graded_level(const std::function<double(GradedNode)>& g, double L, int panels,
                 const GradedOptions& opts) {
  const int depth = std::max(1, panels / 2 - 1);
  const double half = 0.5 * L;
  Sum sum;
  one_side(g, half, depth, opts.power_lo,
           [L](double d) { return GradedNode{d, L - d}; }, sum);
  one_side(g, half, depth, opts.power_hi,
           [L](double d) { return GradedNode{L - d, d}; }, sum);
  return sum;
}

double log_distance_from(const MonotoneMap& map, double anchor, double x) {
  return x >= anchor ? map.log_increment(anchor, x - anchor)
                     : map.log_increment(x, anchor - x);
}

}  // namespace

double logpow_integral_closed_form(const LogPowSpec& spec, double mu, double x) {
  if (!(spec.nu > 0.0)) throw DomainError("log-power exponent must be positive");
  const double rho = log_distance_from(spec.map, spec.anchor, x);
  if (rho < 0.0) throw DomainError("closed form needs x at or beyond the anchor");
  const double p = spec.nu + mu - 1.0;
  if (rho == 0.0 && p > 0.0) return 0.0;
  if (rho == 0.0 && p < 0.0) return HUGE_VAL;
  const double rho_part = p == 0.0 ? 0.0 : p * std::log(rho);
  return std::exp(specialfn::log_gamma(spec.nu) - specialfn::log_gamma(spec.nu + mu) -
                  spec.s * spec.map.log_value(x) + rho_part);
}

double logpow_derivative_closed_form(const LogPowSpec& spec, double mu, double x) {
  if (!(spec.nu > 0.0)) throw DomainError("log-power exponent must be positive");
  const double den = spec.nu - mu;
  if (den <= 0.0 && den == std::floor(den)) return 0.0;
  const double rho = log_distance_from(spec.map, spec.anchor, x);
  if (!(rho > 0.0)) throw DomainError("derivative closed form needs x beyond the anchor");
  const double sign = den > 0.0 ? 1.0 : (static_cast<long>(std::floor(den)) % 2 == 0 ? 1.0 : -1.0);
  const double log_mag = specialfn::log_gamma(spec.nu) - specialfn::log_abs_gamma(den) -
                         spec.s * spec.map.log_value(x) + (den - 1.0) * std::log(rho);
  return sign * std::exp(log_mag);
}

double graded_integrate(const std::function<double(GradedNode)>& g, double length,
                        const GradedOptions& opts) {
  if (length < 0.0) throw DomainError("graded_integrate: negative length");
  if (length == 0.0) return 0.0;
  if (opts.panels < 4) throw DomainError("graded_integrate: too few panels");
  int panels = opts.panels;
  Sum prev = graded_level(g, length, panels, opts);
  while (true) {
    const int next = 2 * panels;
    if (next > opts.max_panels) {
      throw NumericalError("brute-force quadrature did not converge", std::abs(prev.value));
    }
    const Sum cur = graded_level(g, length, next, opts);
    const double diff = std::abs(cur.value - prev.value);
    if (diff <= opts.rel_tol * std::abs(cur.value) + 1e-15 * cur.magnitude) return cur.value;
    prev = cur;
    panels = next;
  }
}

double brute_force_integral(const OperatorSpec& spec, const Integrand& f, double x,
                            int panels) {
  if (panels < 16) throw DomainError("brute_force_integral needs at least 16 panels");
  if (!spec.map.contains(x)) throw DomainError("x outside the map domain");
  const double mu = spec.mu;
  if (!(mu > 0.0)) throw DomainError("brute_force_integral needs a positive order");
  const int sigma = spec.orientation();
  const double z = log_distance(spec, x);
  if (z == 0.0) return 0.0;
  const double ya = spec.map.log_value(spec.anchor);
  const double s = spec.s;
  const auto& map = spec.map;
  // Integrand in the oriented log coordinate τ ∈ [0, z]: the kernel sits at
  // τ = z, the anchor at τ = 0.
  auto g = [&](GradedNode n) {
    const double tau = n.from_lo;
    const Site site{map.inverse_log(ya + sigma * tau), spec.anchor, sigma * tau};
    return std::exp(-s * n.from_hi) * std::pow(n.from_hi, mu - 1.0) * f.value(site);
  };
  GradedOptions opts;
  opts.panels = panels;
  opts.power_hi = std::clamp(static_cast<int>(std::ceil(4.0 / mu)), 8, 64);
  return graded_integrate(g, z, opts) * specialfn::reciprocal_gamma(mu);
}

std::vector<double> newton_leibniz_limits(const OperatorSpec& spec, const Integrand& f,
                                          double scale, const EvalOptions& opts) {
  const double mu = spec.mu;
  if (!(mu > 0.0) || mu == std::floor(mu)) {
    throw DomainError("Newton-Leibniz boundary needs a non-integer positive order");
  }
  std::vector<double> limits;
  for (int k = 1; k <= spec.n(); ++k) {
    const double order = mu - k;
    OperatorSpec inner = spec;
    inner.kind = order < 0.0 ? Kind::Integral : Kind::DerivativeRL;
    inner.mu = std::abs(order);
    auto at = [&](double eps) {
      return evaluate(inner, f, spec.anchor + spec.orientation() * eps, opts).value;
    };
    limits.push_back(one_sided_limit(at, scale).value);
  }
  return limits;
}

double newton_leibniz_boundary(const OperatorSpec& spec, const std::vector<double>& limits,
                               double x) {
  const double z = log_distance(spec, x);
  if (!(z > 0.0)) throw DomainError("Newton-Leibniz boundary needs x beyond the anchor");
  double total = 0.0;
  for (std::size_t i = 0; i < limits.size(); ++i) {
    const double order = spec.mu - static_cast<double>(i + 1);
    total += limits[i] * std::pow(z, order) * specialfn::reciprocal_gamma(order + 1.0);
  }
  return std::exp(-spec.s * z) * total;
}

double newton_leibniz_rhs(const OperatorSpec& spec, const Integrand& f, double x,
                          const EvalOptions& opts, double scale) {
  if (!(log_distance(spec, x) > 0.0)) {
    throw DomainError("Newton-Leibniz boundary needs x beyond the anchor");
  }
  if (scale == 0.0) scale = std::abs(x - spec.anchor);
  return f(x) - newton_leibniz_boundary(spec, newton_leibniz_limits(spec, f, scale, opts), x);
}

}  // namespace fracop

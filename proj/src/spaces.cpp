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

#include "fracop/spaces.hpp"

#include <algorithm>
#include <cmath>

#include "fracop/errors.hpp"
#include "fracop/limits.hpp"
#include "fracop/oracles.hpp"
#include "fracop/specialfn.hpp"

namespace fracop {
namespace {

constexpr int kSupGrid = 2049;
constexpr int kDerivativeGrid = 4097;

double grid_max(const std::function<double(double)>& h, Interval iv, int points) {
  double best = 0.0;
  for (int i = 0; i < points; ++i) {
    const double x = iv.lo + (iv.hi - iv.lo) * i / (points - 1);
    const double v = std::abs(h(x));
    if (!std::isfinite(v)) throw NumericalError("norm: non-finite value on the grid", v);
    best = std::max(best, v);
  }
  return best;
}

double log_length(const MonotoneMap& map, Interval iv) {
  return map.log_increment(iv.lo, iv.hi - iv.lo);
}

}  // namespace

void SpaceSpec::check() const {
  if (!(p >= 1.0)) throw DomainError("space exponent p must be at least 1");
  if (!(interval.lo < interval.hi)) throw DomainError("space interval must have a < b");
  if (!map.contains(interval.lo) || !map.contains(interval.hi)) {
    throw DomainError("space interval outside the map domain");
  }
}

double x_norm(const SpaceSpec& space, const Integrand& f) {
  space.check();
  const auto& map = space.map;
  const double a = space.interval.lo;
  if (space.p == kInfinityNorm) {
    return grid_max([&](double x) { return std::pow(map.value(x), space.c) * f(x); },
                    space.interval, kSupGrid);
  }
  const double ya = map.log_value(a);
  auto g = [&](GradedNode n) {
    const Site site{map.inverse_log(ya + n.from_lo), a, n.from_lo};
    return std::pow(std::abs(std::exp(space.c * (ya + n.from_lo)) * f.value(site)), space.p);
  };
  return std::pow(graded_integrate(g, log_length(map, space.interval)), 1.0 / space.p);
}

double lp_norm(const Integrand& f, double p, Interval iv) {
  if (!(p >= 1.0)) throw DomainError("lp_norm: p must be at least 1");
  if (!(iv.lo < iv.hi)) throw DomainError("lp_norm: empty interval");
  if (p == kInfinityNorm) return grid_max([&](double x) { return f(x); }, iv, kSupGrid);
  auto g = [&](GradedNode n) { return std::pow(std::abs(f(iv.lo + n.from_lo)), p); };
  return std::pow(graded_integrate(g, iv.hi - iv.lo), 1.0 / p);
}

double bound_constant_k(double mu, double s, double c, const SpaceSpec& space) {
  space.check();
  if (!(mu > 0.0)) throw DomainError("bound_constant_k: mu must be positive");
  if (s < c) throw DomainError("bound_constant_k: requires s >= c");
  const double L = log_length(space.map, space.interval);
  if (s == c) return std::pow(L, mu) * specialfn::reciprocal_gamma(mu + 1.0);
  return std::pow(s - c, -mu) * specialfn::lower_incomplete_gamma(mu, (s - c) * L) *
         specialfn::reciprocal_gamma(mu);
}

double holder_estimate_bound(double mu, double s, double p, const SpaceSpec& space,
                             double f_norm, double x1, double x2) {
  space.check();
  const auto& map = space.map;
  const Interval iv = space.interval;
  if (!(mu > 0.0)) throw DomainError("holder bound: mu must be positive");
  if (s < 0.0) throw DomainError("holder bound: requires s >= 0");
  if (!(p > std::max(1.0 / mu, 1.0))) throw DomainError("holder bound: requires p > max(1/mu, 1)");
  if (map.value(iv.hi) > std::exp(1.0) * (1.0 + 1e-12)) {
    throw DomainError("holder bound: requires Psi(b) <= e");
  }
  if (!(iv.lo <= x1 && x1 <= x2 && x2 <= iv.hi)) {
    throw DomainError("holder bound: requires a <= x1 <= x2 <= b");
  }
  if (x1 == x2) return 0.0;
  const double inv_p = p == kInfinityNorm ? 0.0 : 1.0 / p;
  const double q = p == kInfinityNorm ? 1.0 : p / (p - 1.0);
  const double e = q * (mu - 1.0) + 1.0;
  const double dpsi = grid_max([&](double x) { return map.derivative(x); }, iv, kDerivativeGrid);
  const double prefactor = std::pow(map.value(iv.hi), s) * f_norm *
                           std::pow(dpsi / map.value(iv.lo), inv_p) *
                           specialfn::reciprocal_gamma(mu) / std::pow(e, 1.0 / q);
  const double r21 = map.log_increment(x1, x2 - x1);
  const double near = std::pow(r21, mu - inv_p);
  if (mu < 1.0) return prefactor * 2.0 * near;
  if (mu == 1.0) return prefactor * near;
  const double r2 = map.log_increment(iv.lo, x2 - iv.lo);
  const double r1 = map.log_increment(iv.lo, x1 - iv.lo);
  return prefactor * (near + std::pow(std::pow(r2, e) - std::pow(r1, e), 1.0 / q));
}

void AcRepresentation::check() const {
  if (n < 1) throw DomainError("representation order n must be positive");
  if (static_cast<int>(constants.size()) != n) {
    throw DomainError("representation needs exactly n constants");
  }
  if (!density) throw DomainError("representation density is missing");
}

Integrand ac_function(const AcRepresentation& rep, const SpaceSpec& space,
                      const QuadratureConfig& cfg) {
  rep.check();
  space.check();
  const MonotoneMap map = space.map;
  const double a = space.interval.lo;
  const double ya = map.log_value(a);
  // G(ρ) = Ψ^s g = I^n_ρ[φ Ψ/Ψ'] + Σ c_k ρ^k, ρ = log Ψ(x)/Ψ(a).
  auto eval = [rep, map, a, ya, cfg](const Site& site, std::span<double> out) {
    const int order = static_cast<int>(out.size()) - 1;
    double rho = site.offset;
    if (site.ref != a) rho += map.log_increment(a, site.ref - a);
    if (rho < 0.0) throw DomainError("representation evaluated left of the anchor");
    auto density_y = [&](double tau) {
      const double t = map.inverse_log(ya + tau);
      return rep.density(t) / map.dlog(t);
    };
    std::vector<double> G(order + 1, 0.0);
    for (int j = 0; j <= order; ++j) {
      if (j < rep.n) {
        if (rho > 0.0) {
          auto F = [&](UnitPoint pt) { return density_y(rho * pt.w); };
          G[j] = singular_integral(rep.n - j, 0.0, rho, F, cfg).value;
        }
        for (int k = j; k < rep.n; ++k) {
          // d^j/dρ^j ρ^k = k!/(k-j)! ρ^{k-j}
          double falling = 1.0;
          for (int i = 0; i < j; ++i) falling *= k - i;
          G[j] += rep.constants[k] * falling * std::pow(rho, k - j);
        }
      } else if (j == rep.n) {
        G[j] = density_y(rho);
      } else {
        throw DomainError("representation has derivatives only up to order n");
      }
    }
    const double y = ya + rho;
    const double damp = std::exp(-rep.s * y);
    for (int j = 0; j <= order; ++j) {
      double acc = 0.0;
      for (int i = 0; i <= j; ++i) {
        acc += specialfn::binomial(j, i) * std::pow(-rep.s, j - i) * G[i];
      }
      out[j] = damp * acc;
    }
  };
  return Integrand(eval, rep.n, map.key(), "ac");
}

double ac_reconstruct(const AcRepresentation& rep, const SpaceSpec& space, double x,
                      const QuadratureConfig& cfg) {
  if (!(space.interval.lo <= x && x <= space.interval.hi)) {
    throw DomainError("ac_reconstruct: x outside the interval");
  }
  return ac_function(rep, space, cfg)(x);
}

AcRepresentation extract(const Integrand& g, int n, double s, const SpaceSpec& space) {
  space.check();
  if (n < 1) throw DomainError("extract: n must be positive");
  const MonotoneMap map = space.map;
  const Interval iv = space.interval;
  const double a = iv.lo;
  AcRepresentation rep;
  rep.n = n;
  rep.s = s;
  rep.density = [g, map, s, n, iv](double x) {
    return map.dlog(x) * std::pow(map.value(x), s) * apply_delta({map, s, n}, g, x, iv);
  };
  double factorial = 1.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) factorial *= k;
    double dk = NAN;
    if (g.has_derivatives(map, k)) dk = apply_delta({map, s, k}, g, Site{a, a, 0.0});
    if (!std::isfinite(dk)) {
      dk = one_sided_limit(
               [&](double eps) {
                 return apply_delta({map, s, k}, g, Site{map.inverse_log(map.log_value(a) + eps), a, eps}, iv);
               },
               log_length(map, iv))
               .value;
    }
    rep.constants.push_back(std::pow(map.value(a), s) * dk / factorial);
  }
  return rep;
}

double rl_derivative_representation(const AcRepresentation& rep, double mu,
                                    const OperatorSpec& spec, double x,
                                    const QuadratureConfig& cfg) {
  rep.check();
  if (!(mu > 0.0)) throw DomainError("representation derivative needs mu > 0");
  if (static_cast<int>(std::floor(mu)) + 1 != rep.n) {
    throw DomainError("representation order must equal floor(mu) + 1");
  }
  if (spec.side != Side::Left) throw DomainError("representation covers left operators");
  if (rep.s != spec.s) throw DomainError("representation and operator tempering differ");
  const auto& map = spec.map;
  const double a = spec.anchor;
  const double rho = log_distance(spec, x);
  if (!(rho > 0.0)) throw BoundaryError("representation derivative needs x beyond the anchor");
  const double ya = map.log_value(a);
  auto F = [&](UnitPoint pt) {
    const double t = map.inverse_log(ya + rho * pt.w);
    return rep.density(t) / map.dlog(t);
  };
  double total = singular_integral(rep.n - mu, 0.0, rho, F, cfg).value;
  double factorial = 1.0;
  for (int k = 0; k < rep.n; ++k) {
    if (k > 0) factorial *= k;
    total += factorial * rep.constants[k] * std::pow(rho, k - mu) *
             specialfn::reciprocal_gamma(k - mu + 1.0);
  }
  return std::exp(-spec.s * (ya + rho)) * total;
}

}  // namespace fracop

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

#include "fracop/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "fracop/errors.hpp"
#include "fracop/specialfn.hpp"

namespace fracop {
namespace {

// Exponent of the tail substitution w = h v^q on the panel touching u = 1.
constexpr double kTailPower = 10.0;
constexpr int kFirstNodes = 16;

GaussRule golub_welsch(int n, double mu) {
  const double alpha = 0.0;
  const double beta = mu - 1.0;
  const double ab = alpha + beta;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 1);
  diag(0) = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double t = 2.0 * k + ab;
    diag(k) = (beta * beta - alpha * alpha) / (t * (t + 2.0));
    sub(k - 1) = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                           (t * t * (t + 1.0) * (t - 1.0)));
  }
  // Total mass of (1-x)^α (1+x)^β on [-1, 1].
  const double mass = std::exp((ab + 1.0) * std::log(2.0) + specialfn::log_gamma(alpha + 1.0) +
                               specialfn::log_gamma(beta + 1.0) -
                               specialfn::log_gamma(ab + 2.0));
  GaussRule rule;
  rule.node.resize(n);
  rule.complement.resize(n);
  rule.weight.resize(n);
  if (n == 1) {
    const double x = diag(0);
    rule.node[0] = 0.5 * (1.0 + x);
    rule.complement[0] = 0.5 * (1.0 - x);
    rule.weight[0] = mass * std::pow(2.0, -mu);
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  const auto& x = es.eigenvalues();
  const auto& v = es.eigenvectors();
  // Map [-1, 1] onto [0, 1]: (1+x)^β dx = 2^{μ} u^{μ-1} du.
  const double scale = std::pow(2.0, -mu);
  for (int i = 0; i < n; ++i) {
    rule.node[i] = 0.5 * (1.0 + x(i));
    rule.complement[i] = 0.5 * (1.0 - x(i));
    rule.weight[i] = mass * v(0, i) * v(0, i) * scale;
  }
  return rule;
}

struct RuleCache {
  std::mutex mutex;
  std::map<std::pair<int, double>, std::shared_ptr<const GaussRule>> rules;
};

RuleCache& cache() {
  static RuleCache c;
  return c;
}

// One evaluation of the composite scheme. `level` < 0 selects plain
// Gauss-Jacobi on [0, 1]; otherwise [0, 1/2] gets Gauss-Jacobi and [1/2, 1]
// gets `level` dyadic panels, the last one substituted.
class Scheme {
 public:
  Scheme(double mu, double sL, std::size_t m, const UnitFunctionMulti& F)
      : mu_(mu), sL_(sL), m_(m), F_(F), vals_(m) {}

  std::vector<double> plain(int n) {
    std::vector<double> acc(m_, 0.0);
    const auto rule = gauss_jacobi_unit(n, mu_);
    for (int i = 0; i < n; ++i) {
      add(acc, UnitPoint{rule->node[i], rule->complement[i]},
          rule->weight[i] * std::exp(-sL_ * rule->node[i]));
    }
    return acc;
  }

  std::vector<double> composite(int na, int nb, int panels) {
    std::vector<double> acc(m_, 0.0);
    const auto ja = gauss_jacobi_unit(na, mu_);
    const double half = std::pow(0.5, mu_);
    for (int i = 0; i < na; ++i) {
      const double u = 0.5 * ja->node[i];
      add(acc, UnitPoint{u, 1.0 - u}, half * ja->weight[i] * std::exp(-sL_ * u));
    }
    const auto gl = gauss_jacobi_unit(nb, 1.0);
    for (int j = 1; j < panels; ++j) {
      const double h = std::ldexp(1.0, -j - 1);
      for (int i = 0; i < nb; ++i) {
        const double w = h * (1.0 + gl->node[i]);
        const double u = 1.0 - w;
        add(acc, UnitPoint{u, w}, h * gl->weight[i] * kernel(u));
      }
    }
    const double h = std::ldexp(1.0, -panels);
    for (int i = 0; i < nb; ++i) {
      const double v = gl->node[i];
      const double vq1 = std::pow(v, kTailPower - 1.0);
      const double w = h * vq1 * v;
      const double u = 1.0 - w;
      add(acc, UnitPoint{u, w}, kTailPower * h * vq1 * gl->weight[i] * kernel(u));
    }
    return acc;
  }

 private:
  double kernel(double u) const { return std::pow(u, mu_ - 1.0) * std::exp(-sL_ * u); }

  void add(std::vector<double>& acc, UnitPoint p, double weight) {
    F_(p, vals_);
    for (std::size_t k = 0; k < m_; ++k) acc[k] += weight * vals_[k];
  }

  double mu_;
  double sL_;
  std::size_t m_;
  const UnitFunctionMulti& F_;
  std::vector<double> vals_;
};

struct Comparison {
  double error;
  bool converged;
};

Comparison compare(const std::vector<double>& lo, const std::vector<double>& hi,
                   double prefactor, const QuadratureConfig& cfg) {
  Comparison c{0.0, true};
  for (std::size_t k = 0; k < lo.size(); ++k) {
    const double diff = std::abs(prefactor * (hi[k] - lo[k]));
    const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(prefactor * hi[k]));
    if (!(diff <= tol)) c.converged = false;
    if (!(diff <= c.error)) c.error = diff;
  }
  return c;
}

MultiQuadratureResult run(double mu, double s, double L, std::size_t m,
                          const UnitFunctionMulti& F, const QuadratureConfig& cfg) {
  cfg.check();
  if (!(mu > 0.0)) throw DomainError("singular_integral: mu must be positive");
  if (!(L >= 0.0)) throw DomainError("singular_integral: L must be non-negative");
  if (L == 0.0) return {std::vector<double>(m, 0.0), 0.0};
  const double prefactor = std::pow(L, mu) * specialfn::reciprocal_gamma(mu);
  Scheme scheme(mu, s * L, m, F);

  auto finish = [&](std::vector<double> v, double err) {
    for (double& x : v) x *= prefactor;
    return MultiQuadratureResult{std::move(v), err};
  };

  const int top = cfg.jacobi_nodes;
  int n = std::min(kFirstNodes, top);
  auto prev = scheme.plain(std::max(2, n / 2));
  Comparison c{};
  for (;;) {
    auto cur = scheme.plain(n);
    c = compare(prev, cur, prefactor, cfg);
    if (c.converged) return finish(std::move(cur), c.error);
    if (n >= top) break;
    prev = std::move(cur);
    n = std::min(2 * n, top);
  }
  const int na = top;
  const int nb = std::max(4, top / 2);
  for (int panels = 1; panels < cfg.max_subdivisions; ++panels) {
    auto lo = scheme.composite(na / 2, nb / 2, panels);
    auto hi = scheme.composite(na, nb, panels + 1);
    c = compare(lo, hi, prefactor, cfg);
    if (c.converged) return finish(std::move(hi), c.error);
  }
  throw NumericalError("singular quadrature did not converge (error estimate " +
                           std::to_string(c.error) + ")",
                       c.error);
}

}  // namespace

void QuadratureConfig::check() const {
  if (jacobi_nodes < 2) throw DomainError("jacobi_nodes must be at least 2");
  if (max_subdivisions < 2) throw DomainError("max_subdivisions must be at least 2");
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("quadrature tolerances must be positive");
  }
}

std::shared_ptr<const GaussRule> gauss_jacobi_unit(int n, double mu) {
  if (n < 1) throw DomainError("a Gauss rule needs at least one node");
  if (!(mu > 0.0)) throw DomainError("Gauss-Jacobi weight needs mu > 0");
  auto& c = cache();
  const auto key = std::make_pair(n, mu);
  {
    std::lock_guard<std::mutex> lock(c.mutex);
    if (auto it = c.rules.find(key); it != c.rules.end()) return it->second;
  }
  auto rule = std::make_shared<const GaussRule>(golub_welsch(n, mu));
  std::lock_guard<std::mutex> lock(c.mutex);
  // Another thread may have won the race; both rules are bit-identical.
  return c.rules.emplace(key, std::move(rule)).first->second;
}

MultiQuadratureResult singular_integral_multi(double mu, double s, double L,
                                              std::size_t m, const UnitFunctionMulti& F,
                                              const QuadratureConfig& cfg) {
  return run(mu, s, L, m, F, cfg);
}

QuadratureResult singular_integral(double mu, double s, double L, const UnitFunction& F,
                                   const QuadratureConfig& cfg) {
  const UnitFunctionMulti G = [&F](UnitPoint p, std::span<double> out) { out[0] = F(p); };
  auto r = run(mu, s, L, 1, G, cfg);
  return {r.values[0], r.error};
}

double estimate_error(double mu, double s, double L, const UnitFunction& F,
                      const QuadratureConfig& cfg) {
  try {
    return singular_integral(mu, s, L, F, cfg).error;
  } catch (const NumericalError& e) {
    return e.estimate();
  }
}

}  // namespace fracop

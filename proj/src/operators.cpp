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

#include "fracop/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "fracop/errors.hpp"
#include "fracop/limits.hpp"
#include "fracop/specialfn.hpp"

namespace fracop {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_integer(double mu) { return mu == std::floor(mu); }

// Coefficients c_i with Π_{j<m}(θ + ν - j) = Σ_i c_i t^i d^i/dt^i, θ = t d/dt.
std::vector<double> dilation_coefficients(int m, double nu) {
  std::vector<double> p{1.0};
  for (int j = 0; j < m; ++j) {
    std::vector<double> next(p.size() + 1, 0.0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] += (nu - j) * p[k];
    }
    p = std::move(next);
  }
  // θ^k = Σ_i S(k,i) t^i D^i with Stirling numbers of the second kind.
  std::vector<std::vector<double>> S(m + 1, std::vector<double>(m + 1, 0.0));
  S[0][0] = 1.0;
  for (int k = 1; k <= m; ++k) {
    for (int i = 1; i <= k; ++i) S[k][i] = i * S[k - 1][i] + S[k - 1][i - 1];
  }
  std::vector<double> c(m + 1, 0.0);
  for (int k = 0; k <= m; ++k) {
    for (int i = 0; i <= k; ++i) c[i] += p[k] * S[k][i];
  }
  return c;
}

// The operator seen from its anchor: oriented coordinate, tempering and the
// integrand, with the evaluation options.
struct Frame {
  const OperatorSpec& spec;
  const Integrand& f;
  const EvalOptions& opts;
  int sigma;
  double y_anchor;

  Frame(const OperatorSpec& sp, const Integrand& fn, const EvalOptions& o)
      : spec(sp), f(fn), opts(o), sigma(sp.orientation()),
        y_anchor(sp.map.log_value(sp.anchor)) {}

  Site site_at(double z) const {
    return Site{spec.map.inverse_log(y_anchor + sigma * z), spec.anchor, sigma * z};
  }

  // Oriented tempered derivatives δ̃^k f, k = 0..K, at a site.
  void deltas(const Site& site, int K, std::span<double> out) const {
    if (K == 0) {
      out[0] = f.value(site);
      return;
    }
    auto d = log_derivatives(spec.map, f, site, K, opts.window);
    if (sigma < 0) {
      for (int j = 1; j <= K; j += 2) d[j] = -d[j];
    }
    for (int k = 0; k <= K; ++k) out[k] = tempered_combination(d, spec.s, k);
  }

  // e^{-sz} D^m I^ν [e^{sz} f], m = m0..m1, with f replaced by its
  // shift-th δ̃ derivative (Caputo).
  MultiQuadratureResult family(double nu, int m0, int m1, int shift, double z) const {
    const int K = m1 + shift;
    const std::size_t count = static_cast<std::size_t>(m1 - m0 + 1);
    std::vector<std::vector<double>> coef;
    for (int m = m0; m <= m1; ++m) coef.push_back(dilation_coefficients(m, nu));
    auto F = [&](UnitPoint p, std::span<double> out) {
      const double tau = z * p.w;
      std::vector<double> dl(K + 1);
      deltas(site_at(tau), K, dl);
      for (std::size_t c = 0; c < count; ++c) {
        const auto& cm = coef[c];
        double acc = 0.0;
        double tpow = 1.0;
        for (std::size_t i = 0; i < cm.size(); ++i) {
          acc += cm[i] * tpow * dl[i + shift];
          tpow *= tau;
        }
        out[c] = acc;
      }
    };
    // The result is divided by z^m below, so the absolute tolerance shrinks
    // with it near the anchor. When the image vanishes identically only
    // roundoff is left, and the unscaled tolerance is the best available.
    QuadratureConfig quad = opts.quad;
    const double amplification = std::pow(z, -static_cast<double>(m1));
    if (amplification > 1.0) quad.abs_tol = std::max(quad.abs_tol / amplification, 1e-300);
    MultiQuadratureResult r;
    try {
      r = singular_integral_multi(nu, spec.s, z, count, F, quad);
    } catch (const NumericalError&) {
      if (!(amplification > 1.0)) throw;
      r = singular_integral_multi(nu, spec.s, z, count, F, opts.quad);
    }
    for (std::size_t c = 0; c < count; ++c) {
      r.values[c] *= std::pow(z, -static_cast<double>(m0 + static_cast<int>(c)));
    }
    r.error *= std::max(1.0, amplification);
    return r;
  }

  double integer_delta(int n, const Site& site) const {
    std::vector<double> dl(n + 1);
    deltas(site, n, dl);
    return dl[n];
  }

  Evaluation direct(double z) const {
    const int n = spec.n();
    const double nu = n - spec.mu;
    double qerr = 0.0;
    auto h = [&](double o) {
      auto r = family(nu, 0, 0, 0, z + o);
      qerr = std::max(qerr, r.error);
      return r.values[0];
    };
    // Room on the far side of x, in z units.
    const Interval dom = spec.map.domain();
    const double lo = std::max(dom.lo, opts.window.lo);
    const double hi = std::min(dom.hi, opts.window.hi);
    const double x = site_at(z).x;
    double room = kInf;
    if (sigma > 0 && std::isfinite(hi)) room = spec.map.log_increment(x, hi - x);
    if (sigma < 0 && std::isfinite(lo)) room = spec.map.log_increment(lo, x - lo);
    const auto d = numeric_log_derivatives(h, n, y_anchor + sigma * z, -z, room);
    return {tempered_combination(d, spec.s, n), qerr};
  }

  Evaluation representation(double z) const {
    const int n = spec.n();
    auto caputo = family(n - spec.mu, 0, 0, n, z);
    const Site at_anchor{spec.anchor, spec.anchor, 0.0};
    std::vector<double> g(n, NAN);
    if (f.has_derivatives(spec.map, n - 1)) {
      std::vector<double> dl(n);
      deltas(at_anchor, n - 1, dl);
      g = dl;
    }
    double err = caputo.error;
    for (int k = 0; k < n; ++k) {
      if (std::isfinite(g[k])) continue;
      auto lim = one_sided_limit([&](double e) { return integer_delta(k, site_at(e)); }, z);
      g[k] = lim.value;
      err += lim.error;
    }
    double boundary = 0.0;
    for (int k = 0; k < n; ++k) {
      boundary += g[k] * std::pow(z, k - spec.mu) *
                  specialfn::reciprocal_gamma(k - spec.mu + 1.0);
    }
    return {caputo.values[0] + std::exp(-spec.s * z) * boundary, err};
  }

  Evaluation at(double z) const {
    const double mu = spec.mu;
    if (mu == 0.0) return {f.value(site_at(z)), 0.0};
    if (spec.kind == Kind::Integral) {
      if (z == 0.0) return {0.0, 0.0};
      auto r = family(mu, 0, 0, 0, z);
      return {r.values[0], r.error};
    }
    if (is_integer(mu)) return {integer_delta(static_cast<int>(mu), site_at(z)), 0.0};
    const int n = spec.n();
    if (spec.kind == Kind::DerivativeCaputo) {
      if (z == 0.0) return {0.0, 0.0};
      auto r = family(n - mu, 0, 0, n, z);
      return {r.values[0], r.error};
    }
    if (z == 0.0) throw BoundaryError("derivative is singular at the anchor");
    DerivativePath path = opts.path;
    if (path == DerivativePath::Auto) {
      path = f.has_derivatives(spec.map, n) ? DerivativePath::Dilation
                                            : DerivativePath::Direct;
    }
    switch (path) {
      case DerivativePath::Dilation: {
        auto r = family(n - mu, n, n, 0, z);
        return {r.values[0], r.error};
      }
      case DerivativePath::Representation:
        return representation(z);
      default:
        return direct(z);
    }
  }
};

double oriented_z(const OperatorSpec& spec, const Site& site) {
  double y = site.offset;
  if (site.ref != spec.anchor) y += spec.map.log_increment(spec.anchor, site.ref - spec.anchor);
  const double z = spec.orientation() * y;
  if (z < 0.0) {
    if (z > -1e-14) return 0.0;
    throw DomainError("point lies on the wrong side of the anchor");
  }
  return z;
}

}  // namespace

int OperatorSpec::n() const { return static_cast<int>(std::floor(mu)) + 1; }

void OperatorSpec::check() const {
  if (!(mu >= 0.0) || !std::isfinite(mu)) throw DomainError("order must be finite and non-negative");
  if (!std::isfinite(s)) throw DomainError("tempering parameter must be finite");
  if (!map.contains(anchor)) throw DomainError("anchor outside the map domain");
}

double log_distance(const OperatorSpec& spec, double x) {
  return oriented_z(spec, Site::at(x));
}

Evaluation evaluate(const OperatorSpec& spec, const Integrand& f, const Site& site,
                    const EvalOptions& opts) {
  spec.check();
  opts.quad.check();
  if (spec.mu == 0.0) return {f.value(site), 0.0};
  const double z = oriented_z(spec, site);
  return Frame(spec, f, opts).at(z);
}

Evaluation evaluate(const OperatorSpec& spec, const Integrand& f, double x,
                    const EvalOptions& opts) {
  if (!spec.map.contains(x)) throw DomainError("x outside the map domain");
  return evaluate(spec, f, Site::at(x), opts);
}

Evaluation evaluate_with_limit(const OperatorSpec& spec, const Integrand& f, double x,
                               double scale, const EvalOptions& opts) {
  if (x != spec.anchor || spec.kind != Kind::DerivativeRL || is_integer(spec.mu)) {
    return evaluate(spec, f, x, opts);
  }
  spec.check();
  auto lim = one_sided_limit(
      [&](double eps) { return evaluate(spec, f, spec.anchor + spec.orientation() * eps, opts).value; },
      scale);
  return {lim.value, lim.error};
}

double frac_integral(const OperatorSpec& spec, const Integrand& f, double x,
                     const EvalOptions& opts) {
  if (spec.kind != Kind::Integral) throw DomainError("frac_integral needs kind=Integral");
  return evaluate(spec, f, x, opts).value;
}

double frac_derivative_rl(const OperatorSpec& spec, const Integrand& f, double x,
                          const EvalOptions& opts) {
  if (spec.kind != Kind::DerivativeRL) throw DomainError("frac_derivative_rl needs kind=DerivativeRL");
  return evaluate(spec, f, x, opts).value;
}

double frac_derivative_caputo(const OperatorSpec& spec, const Integrand& f, double x,
                              const EvalOptions& opts) {
  if (spec.kind != Kind::DerivativeCaputo) {
    throw DomainError("frac_derivative_caputo needs kind=DerivativeCaputo");
  }
  return evaluate(spec, f, x, opts).value;
}

double oriented_delta(const MonotoneMap& map, int side, double s, int n,
                      const Integrand& f, const Site& site, Interval window) {
  if (n == 0) return f.value(site);
  auto d = log_derivatives(map, f, site, n, window);
  if (side < 0) {
    for (int j = 1; j <= n; j += 2) d[j] = -d[j];
  }
  return tempered_combination(d, s, n);
}

Integrand as_integrand(const OperatorSpec& spec, Integrand f, EvalOptions opts) {
  spec.check();
  const double mu = spec.mu;
  // g = e^{-sz} D^{m0} I^ν [e^{sz} D^{shift}-part of f]; integer orders reduce
  // to δ̃^{m0} f with no quadrature.
  int m0 = 0;
  int shift = 0;
  double nu = mu;
  bool quadrature = mu > 0.0;
  if (mu == 0.0) {
    quadrature = false;
  } else if (spec.kind != Kind::Integral && is_integer(mu)) {
    m0 = static_cast<int>(mu);
    quadrature = false;
  } else if (spec.kind == Kind::DerivativeRL) {
    m0 = spec.n();
    nu = m0 - mu;
  } else if (spec.kind == Kind::DerivativeCaputo) {
    shift = spec.n();
    nu = shift - mu;
  }
  const int used = m0 + shift;
  int order = 0;
  if (f.has_derivatives(spec.map, used)) {
    order = std::max(0, std::min(f.max_order() - used, 12));
    if (f.map_key() != spec.map.key()) order = 0;
  }
  const bool analytic = used == 0 || f.has_derivatives(spec.map, used);
  if (spec.kind == Kind::DerivativeRL && quadrature && !analytic) {
    // Plain functions: values only, through the generic evaluator.
    auto eval = [spec, f, opts](const Site& site, std::span<double> out) {
      out[0] = evaluate(spec, f, site, opts).value;
    };
    return Integrand(eval, 0, spec.map.key(), "op(" + f.tag() + ")");
  }
  auto eval = [spec, f, opts, m0, shift, nu, quadrature](const Site& site,
                                                        std::span<double> out) {
    const int k = static_cast<int>(out.size()) - 1;
    const double z = oriented_z(spec, site);
    Frame fr(spec, f, opts);
    std::vector<double> h(k + 1);  // D_z^i applied to the inner operator
    if (!quadrature) {
      std::vector<double> dl(m0 + k + 1);
      fr.deltas(site, m0 + k, dl);
      for (int i = 0; i <= k; ++i) h[i] = dl[m0 + i];
      // h[i] currently holds δ̃^{m0+i} f = e^{-sz} D^{m0+i}[e^{sz} f].
    } else {
      if (z == 0.0) {
        if (k > 0 || spec.kind == Kind::DerivativeRL) {
          throw BoundaryError("operator output is singular at the anchor");
        }
        out[0] = 0.0;
        return;
      }
      auto r = fr.family(nu, m0, m0 + k, shift, z);
      h = r.values;
    }
    // D_z^j (e^{-sz} H) = Σ_i C(j,i) (-s)^{j-i} e^{-sz} H^{(i)}; oriented back to y.
    for (int j = 0; j <= k; ++j) {
      double acc = 0.0;
      for (int i = 0; i <= j; ++i) {
        acc += specialfn::binomial(j, i) * std::pow(-spec.s, j - i) * h[i];
      }
      out[j] = (spec.side == Side::Right && (j % 2 == 1)) ? -acc : acc;
    }
  };
  std::ostringstream tag;
  tag << "op(" << f.tag() << ")";
  return Integrand(eval, order, spec.map.key(), tag.str());
}

RealFn compose_q(RealFn inner, RealFn f) {
  return [inner = std::move(inner), f = std::move(f)](double x) { return f(inner(x)); };
}

RealFn compose_q(const MonotoneMap& map, RealFn f) {
  return [map, f = std::move(f)](double x) {
    if (!map.contains(x)) throw DomainError("compose_q: point outside the map domain");
    return f(map.value(x));
  };
}

RealFn compose_m(RealFn weight, RealFn f) {
  return [weight = std::move(weight), f = std::move(f)](double x) { return weight(x) * f(x); };
}

Integrand compose_m(RealFn weight, const Integrand& f) {
  auto eval = [weight = std::move(weight), f](const Site& site, std::span<double> out) {
    out[0] = weight(site.x) * f.value(site);
  };
  return Integrand(eval, 0, "", "M(" + f.tag() + ")");
}

RealFn lift_to_log(const MonotoneMap& map, const Integrand& f, double anchor) {
  const double ya = map.log_value(anchor);
  return [map, f, anchor, ya](double y) {
    return f.value(Site{map.inverse_log(y), anchor, y - ya});
  };
}

RealFn rl_integral(double mu, double y0, RealFn g, QuadratureConfig cfg) {
  return [mu, y0, g = std::move(g), cfg](double y) {
    const double L = y - y0;
    if (L < 0.0) throw DomainError("rl_integral: point below the lower limit");
    if (L == 0.0) return 0.0;
    auto F = [&](UnitPoint p) { return g(y0 + L * p.w); };
    return singular_integral(mu, 0.0, L, F, cfg).value;
  };
}

double conjugation_h(const OperatorSpec& spec, const Integrand& f, double x,
                     QuadratureConfig cfg) {
  if (spec.side != Side::Left || spec.kind != Kind::Integral) {
    throw DomainError("conjugation forms cover the left integral");
  }
  const MonotoneMap map = spec.map;
  const double s = spec.s;
  auto psi_s = [map, s](double t) { return std::pow(map.value(t), s); };
  auto psi_minus_s = [map, s](double t) { return std::pow(map.value(t), -s); };
  auto weighted = compose_m(psi_s, f);
  auto lifted = lift_to_log(map, weighted, spec.anchor);
  auto integrated = rl_integral(spec.mu, map.log_value(spec.anchor), lifted, cfg);
  auto back = compose_q([map](double t) { return map.log_value(t); }, integrated);
  return compose_m(psi_minus_s, back)(x);
}

double conjugation_t(const OperatorSpec& spec, const Integrand& f, double x,
                     QuadratureConfig cfg) {
  if (spec.side != Side::Left || spec.kind != Kind::Integral) {
    throw DomainError("conjugation forms cover the left integral");
  }
  const MonotoneMap map = spec.map;
  const double s = spec.s;
  auto lifted = lift_to_log(map, f, spec.anchor);
  auto tempered = compose_m([s](double y) { return std::exp(s * y); }, lifted);
  auto integrated = rl_integral(spec.mu, map.log_value(spec.anchor), tempered, cfg);
  auto untempered = compose_m([s](double y) { return std::exp(-s * y); }, integrated);
  return compose_q([map](double t) { return map.log_value(t); }, untempered)(x);
}

Reduction reduce_special_case(const OperatorSpec& spec) {
  const std::string& tag = spec.map.tag();
  const bool plain = spec.s == 0.0;
  const bool caputo = spec.kind == Kind::DerivativeCaputo;
  std::ostringstream d;
  d << "mu=" << spec.mu;
  if (!plain) d << ", s=" << spec.s;
  if (tag == "identity") {
    return {plain ? "Hadamard" : "Hadamard-type", d.str() + ", kernel in log x"};
  }
  if (tag == "exp") {
    if (plain) return {caputo ? "Caputo-classical" : "RL", d.str()};
    return {"tempered", d.str()};
  }
  if (tag.rfind("exp_power", 0) == 0) {
    const std::string rho = tag.size() > 10 ? tag.substr(10) : "1";
    if (plain) return {"Katugampola", d.str() + ", rho=" + rho};
    return {"tempered-wrt-phi", d.str() + ", phi=x^rho/rho, rho=" + rho};
  }
  if (tag == "sqrt" || tag.rfind("power", 0) == 0) {
    return {plain ? "RL-wrt-phi" : "tempered-wrt-phi", d.str() + ", phi=log(" + tag + ")"};
  }
  return {"general", d.str() + ", map=" + tag};
}

}  // namespace fracop

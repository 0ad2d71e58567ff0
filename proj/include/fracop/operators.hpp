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

/// Fractional integrals and derivatives of order μ with tempering s taken
/// with respect to a monotone map Ψ, on either side of an anchor.
///
/// All evaluation happens in the oriented log coordinate
/// z = ±(log Ψ(x) - log Ψ(anchor)) ≥ 0, where every operator of the family is
/// e^{-sz} ∘ (classical Riemann-Liouville operator) ∘ e^{sz}.

#include <functional>
#include <string>

#include "fracop/integrand.hpp"
#include "fracop/psi.hpp"
#include "fracop/quadrature.hpp"

namespace fracop {

enum class Kind { Integral, DerivativeRL, DerivativeCaputo };
enum class Side { Left, Right };

/// How a Riemann-Liouville derivative of non-integer order is evaluated.
///  - Dilation: one quadrature of the analytic δ-derivatives of f, from the
///    commutation of z·d/dz with the fractional integral. Valid whenever the
///    derivative exists, including f singular at the anchor.
///  - Representation: Caputo part plus boundary sum over δ^k f(anchor);
///    needs f in the absolutely continuous class.
///  - Direct: numeric δ^n of the fractional integral of order n - μ.
///  - Auto: Dilation when analytic derivatives exist, else Direct.
enum class DerivativePath { Auto, Dilation, Representation, Direct };

struct OperatorSpec {
  MonotoneMap map;
  Kind kind = Kind::Integral;
  Side side = Side::Left;
  double mu = 0.5;
  double s = 0.0;
  double anchor = 0.0;

  /// ⌊μ⌋ + 1.
  int n() const;
  /// +1 for a left operator, -1 for a right one.
  int orientation() const { return side == Side::Left ? 1 : -1; }
  void check() const;
};

struct EvalOptions {
  QuadratureConfig quad{};
  DerivativePath path = DerivativePath::Auto;
  /// Region where numeric differentiation stencils may sample f.
  Interval window{-1e308, 1e308};
};

struct Evaluation {
  double value;
  double error;
};

/// Evaluates the operator described by `spec` on f at x.
Evaluation evaluate(const OperatorSpec& spec, const Integrand& f, double x,
                    const EvalOptions& opts = {});
Evaluation evaluate(const OperatorSpec& spec, const Integrand& f, const Site& site,
                    const EvalOptions& opts = {});

double frac_integral(const OperatorSpec& spec, const Integrand& f, double x,
                     const EvalOptions& opts = {});
double frac_derivative_rl(const OperatorSpec& spec, const Integrand& f, double x,
                          const EvalOptions& opts = {});
double frac_derivative_caputo(const OperatorSpec& spec, const Integrand& f, double x,
                              const EvalOptions& opts = {});

/// The function x ↦ (op f)(x) as an integrand. When f carries analytic
/// log-derivatives for the operator's map, so does the result (computed by
/// quadrature), which lets operators be nested without numeric
/// differentiation.
Integrand as_integrand(const OperatorSpec& spec, Integrand f, EvalOptions opts = {});

/// evaluate, except that a fractional RL derivative at its own anchor, where
/// it is undefined, returns the one-sided limit from inside; the limit samples
/// points up to `scale` away from the anchor.
Evaluation evaluate_with_limit(const OperatorSpec& spec, const Integrand& f, double x,
                               double scale, const EvalOptions& opts = {});

/// Oriented log distance z of x from the anchor.
double log_distance(const OperatorSpec& spec, double x);

/// δ^{Ψ,s,n} on the operator's side: Ψ^{-s}(Ψ/Ψ' d/dx)^n Ψ^s on the left and
/// (-1)^n Ψ^{s}(Ψ/Ψ' d/dx)^n Ψ^{-s} on the right.
double oriented_delta(const MonotoneMap& map, int side, double s, int n,
                      const Integrand& f, const Site& site,
                      Interval window = {-1e308, 1e308});

// Conjugation combinators.
using RealFn = std::function<double(double)>;

/// Q_g f = f ∘ g.
RealFn compose_q(RealFn inner, RealFn f);
RealFn compose_q(const MonotoneMap& map, RealFn f);
/// M_w f = w · f.
RealFn compose_m(RealFn weight, RealFn f);
Integrand compose_m(RealFn weight, const Integrand& f);
/// Q_{log Ψ}^{-1} f: y ↦ f(Ψ^{-1}(e^y)). Points keep their exact offset
/// from `anchor`.
RealFn lift_to_log(const MonotoneMap& map, const Integrand& f, double anchor);
/// The plain left Riemann-Liouville integral of order μ with lower limit y0.
RealFn rl_integral(double mu, double y0, RealFn g, QuadratureConfig cfg = {});

/// Left integral through M_{Ψ^s}^{-1} ∘ Q_{log Ψ} ∘ I^μ ∘ Q_{log Ψ}^{-1} ∘ M_{Ψ^s}.
double conjugation_h(const OperatorSpec& spec, const Integrand& f, double x,
                     QuadratureConfig cfg = {});
/// Left integral through Q_{log Ψ} ∘ M_{e^{sy}}^{-1} ∘ I^μ ∘ M_{e^{sy}} ∘ Q_{log Ψ}^{-1}.
double conjugation_t(const OperatorSpec& spec, const Integrand& f, double x,
                     QuadratureConfig cfg = {});

struct Reduction {
  std::string name;    // RL, Caputo-classical, Hadamard, Hadamard-type, tempered,
                       // Katugampola, RL-wrt-phi, tempered-wrt-phi, general
  std::string detail;  // parameter mapping
};

/// Names the classical operator a spec reduces to.
Reduction reduce_special_case(const OperatorSpec& spec);

}  // namespace fracop

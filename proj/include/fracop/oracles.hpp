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

/// Reference values independent of the operator engine: closed forms for
/// log-power functions and a brute-force integrator built on a different
/// quadrature family.

#include <functional>
#include <vector>

#include "fracop/integrand.hpp"
#include "fracop/operators.hpp"
#include "fracop/psi.hpp"

namespace fracop {

/// f(x) = Ψ(x)^{-s} (log Ψ(x)/Ψ(a))^{ν-1}.
struct LogPowSpec {
  double nu;
  MonotoneMap map;
  double s = 0.0;
  double anchor = 0.0;
};

/// Γ(ν)/Γ(ν+μ) Ψ(x)^{-s} ρ^{ν+μ-1}.
double logpow_integral_closed_form(const LogPowSpec& spec, double mu, double x);
/// Γ(ν)/Γ(ν-μ) Ψ(x)^{-s} ρ^{ν-μ-1}; identically 0 when ν-μ is a
/// non-positive integer.
double logpow_derivative_closed_form(const LogPowSpec& spec, double mu, double x);

/// A quadrature node with its exact distances to both interval ends.
struct GradedNode {
  double from_lo;
  double from_hi;
};

struct GradedOptions {
  int panels = 16;
  double rel_tol = 1e-9;
  int max_panels = 1 << 20;
  /// Power of the substitution used on the two innermost panels.
  int power_lo = 10;
  int power_hi = 10;
};

/// ∫_0^L g over a mesh of 20-point Gauss-Legendre panels graded
/// geometrically toward both ends, refined until two levels agree.
/// Throws NumericalError past max_panels.
double graded_integrate(const std::function<double(GradedNode)>& g, double length,
                        const GradedOptions& opts = {});

/// The defining integral of a left or right fractional integral, evaluated
/// by graded_integrate.
double brute_force_integral(const OperatorSpec& spec, const Integrand& f, double x,
                            int panels = 16);

/// lim_{t→anchor} D^{μ-k,s} f(t) for k = 1..n, with negative orders read as
/// integrals, taken by one_sided_limit with the given scale.
std::vector<double> newton_leibniz_limits(const OperatorSpec& spec, const Integrand& f,
                                          double scale, const EvalOptions& opts = {});
/// Σ_k e^{-sz} z^{μ-k}/Γ(μ-k+1) · limits[k-1], the boundary part of I^μ D^μ f(x).
double newton_leibniz_boundary(const OperatorSpec& spec, const std::vector<double>& limits,
                               double x);
/// f(x) minus the boundary part, i.e. the expected value of I^μ D^μ f(x).
/// A zero scale means |x - anchor|.
double newton_leibniz_rhs(const OperatorSpec& spec, const Integrand& f, double x,
                          const EvalOptions& opts = {}, double scale = 0.0);

}  // namespace fracop

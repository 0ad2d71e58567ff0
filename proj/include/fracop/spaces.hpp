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

/// Weighted L^p spaces adapted to Ψ, the boundedness constant of the
/// fractional integral on them, the Hölder-type continuity bound, and the
/// representation of functions with n absolutely continuous δ-derivatives.

#include <functional>
#include <limits>
#include <vector>

#include "fracop/integrand.hpp"
#include "fracop/operators.hpp"
#include "fracop/psi.hpp"

namespace fracop {

inline constexpr double kInfinityNorm = std::numeric_limits<double>::infinity();

struct SpaceSpec {
  MonotoneMap map;
  double p = 2.0;  // kInfinityNorm for the sup norm
  double c = 0.0;
  Interval interval{1.0, 2.0};

  void check() const;
};

/// (∫_a^b |Ψ^c f|^p Ψ'/Ψ dx)^{1/p}; for p = ∞ the maximum of Ψ^c|f| over
/// 2049 equispaced points.
double x_norm(const SpaceSpec& space, const Integrand& f);

/// Plain (∫_a^b |f|^p dx)^{1/p}; p = ∞ uses the same 2049-point grid.
double lp_norm(const Integrand& f, double p, Interval interval);

/// The constant K with ‖I^{μ,s} f‖ ≤ K ‖f‖ in the weighted space; needs s ≥ c.
double bound_constant_k(double mu, double s, double c, const SpaceSpec& space);

/// Upper bound on |Ψ(x2)^s I^{μ,s}f(x2) - Ψ(x1)^s I^{μ,s}f(x1)| for f with
/// plain L^p norm f_norm. Requires Ψ(b) ≤ e, s ≥ 0, p > max(1/μ, 1) and
/// a ≤ x1 ≤ x2 ≤ b. ‖Ψ'‖∞ is a 4097-point grid maximum.
double holder_estimate_bound(double mu, double s, double p, const SpaceSpec& space,
                             double f_norm, double x1, double x2);

/// g = Ψ^{-s}[ (1/(n-1)!) ∫_a^x (log Ψ(x)/Ψ(t))^{n-1} φ(t) dt + Σ_k c_k (log Ψ(x)/Ψ(a))^k ].
struct AcRepresentation {
  int n = 1;
  double s = 0.0;
  std::function<double(double)> density;
  std::vector<double> constants;

  void check() const;
};

double ac_reconstruct(const AcRepresentation& rep, const SpaceSpec& space, double x,
                      const QuadratureConfig& cfg = {});

/// The reconstructed function with analytic log-derivatives up to order n.
Integrand ac_function(const AcRepresentation& rep, const SpaceSpec& space,
                      const QuadratureConfig& cfg = {});

/// Recovers φ = (Ψ'/Ψ) Ψ^s δ^n g and c_k = Ψ(a)^s δ^k g(a)/k! from g.
AcRepresentation extract(const Integrand& g, int n, double s, const SpaceSpec& space);

/// RL derivative of order μ, n - 1 ≤ μ < n, of the function described by
/// `rep`, from its density and anchor values. `spec` supplies the map, the
/// anchor and s.
double rl_derivative_representation(const AcRepresentation& rep, double mu,
                                    const OperatorSpec& spec, double x,
                                    const QuadratureConfig& cfg = {});

}  // namespace fracop

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

/// Quadrature for the weakly singular tempered kernel
///
///   (L^μ/Γ(μ)) ∫_0^1 u^{μ-1} e^{-sLu} F(u) du.
///
/// The u^{μ-1} factor is absorbed into Gauss-Jacobi weights. When F is not
/// smooth at u = 1 (the anchor side of every operator), [1/2, 1] is split
/// into dyadic panels toward u = 1 and the last panel is integrated after a
/// power substitution that flattens algebraic endpoint behaviour.

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace fracop {

struct QuadratureConfig {
  int jacobi_nodes = 64;
  int max_subdivisions = 12;
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;

  /// Throws DomainError if the invariants are violated.
  void check() const;
};

/// A point of [0, 1] with its complement 1 - u carried separately, so that
/// points next to u = 1 keep full relative precision in w.
struct UnitPoint {
  double u;
  double w;
};

struct QuadratureResult {
  double value;
  double error;
};

struct MultiQuadratureResult {
  std::vector<double> values;
  double error;
};

using UnitFunction = std::function<double(UnitPoint)>;
using UnitFunctionMulti = std::function<void(UnitPoint, std::span<double>)>;

/// Gauss-Jacobi rule on [0,1] for the weight u^{μ-1}.
struct GaussRule {
  std::vector<double> node;        // u_i
  std::vector<double> complement;  // 1 - u_i
  std::vector<double> weight;
};

/// Cached n-point rule for weight u^{μ-1}; μ = 1 gives Gauss-Legendre.
std::shared_ptr<const GaussRule> gauss_jacobi_unit(int n, double mu);

QuadratureResult singular_integral(double mu, double s, double L, const UnitFunction& F,
                                   const QuadratureConfig& cfg = {});

/// Integrates m functions sharing one set of nodes. The error is the largest
/// component error.
MultiQuadratureResult singular_integral_multi(double mu, double s, double L,
                                              std::size_t m, const UnitFunctionMulti& F,
                                              const QuadratureConfig& cfg = {});

/// |S(N) - S(2N)| at the level where singular_integral stops.
double estimate_error(double mu, double s, double L, const UnitFunction& F,
                      const QuadratureConfig& cfg = {});

}  // namespace fracop

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

/// Gamma-family special functions on the real line.
///
/// Every routine is a pure function. Ratios of Gamma values go through
/// log space so that large arguments never overflow an intermediate.

namespace fracop::specialfn {

/// Γ(z). Throws DomainError at the poles z = 0, -1, -2, ...
double gamma(double z);

/// ln Γ(z) for z > 0.
double log_gamma(double z);

/// ln |Γ(z)| for any non-pole z.
double log_abs_gamma(double z);

/// 1/Γ(z), which is entire: returns exactly 0 at the poles of Γ.
double reciprocal_gamma(double z);

/// Γ(num)/Γ(den) computed in log space. A pole in the denominator gives 0;
/// a pole in the numerator throws DomainError.
double gamma_ratio(double num, double den);

/// Lower incomplete gamma γ(mu, x) = ∫_0^x e^{-t} t^{mu-1} dt, mu > 0, x >= 0.
double lower_incomplete_gamma(double mu, double x);

/// Binomial coefficient C(n, k) as a double.
double binomial(int n, int k);

namespace detail {

// The two branches of lower_incomplete_gamma, exposed so they can be compared
// against each other away from the switch point.
double lower_gamma_series(double mu, double x);
double lower_gamma_continued_fraction(double mu, double x);

}  // namespace detail

}  // namespace fracop::specialfn

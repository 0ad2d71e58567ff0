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

/// Closed-form test functions with exact log-derivatives of every order.
///
/// Each function is a finite sum of terms c·Ψ(x)^λ·ρ^p where ρ is the
/// log-distance to an anchor: ρ = log Ψ(x)/Ψ(a) for a left anchor and
/// ρ = log Ψ(b)/Ψ(x) for a right one.

#include <string>
#include <string_view>
#include <vector>

#include "fracop/integrand.hpp"
#include "fracop/psi.hpp"

namespace fracop {

struct LogTerm {
  double coef = 1.0;
  double lambda = 0.0;  // exponent of Ψ(x)
  double power = 0.0;   // exponent of ρ
  double anchor = 0.0;
  int side = +1;        // +1: ρ measured from a left anchor; -1: from a right one
};

class LogSeries {
 public:
  LogSeries(MonotoneMap map, std::vector<LogTerm> terms, std::string tag);

  /// Highest log-derivative order provided by integrand().
  static constexpr int kMaxOrder = 12;

  Integrand integrand() const;
  const MonotoneMap& map() const { return map_; }
  const std::vector<LogTerm>& terms() const { return terms_; }
  const std::string& tag() const { return tag_; }

  LogSeries operator+(const LogSeries& other) const;
  LogSeries operator*(double factor) const;

 private:
  MonotoneMap map_;
  std::vector<LogTerm> terms_;
  std::string tag_;
};

namespace catalogue {

/// Ψ(x)^{-s} (log Ψ(x)/Ψ(a))^{ν-1}.
LogSeries logpow(const MonotoneMap& map, double nu, double s, double a);
/// Right-anchored mirror: Ψ(x)^{s} (log Ψ(b)/Ψ(x))^{ν-1}.
LogSeries logpow_right(const MonotoneMap& map, double nu, double s, double b);
LogSeries constant(const MonotoneMap& map, double c);
/// Σ_k c_k (log Ψ(x)/Ψ(a))^k.
LogSeries logpoly(const MonotoneMap& map, std::vector<double> coeffs, double a);
/// Ψ(x)^λ.
LogSeries psi_power(const MonotoneMap& map, double lambda);

/// Parses the CLI function syntax. Terms are joined with '+', each optionally
/// scaled as "2.5*term":
///   logpow:nu=V   rlogpow:nu=V   const:C   logpoly:c0,c1,...
///   psi_inv       psi_pow:L
/// `s`, `a` and `b` supply the tempering and the anchors.
LogSeries parse(std::string_view spec, const MonotoneMap& map, double s, double a,
                double b);

}  // namespace catalogue
}  // namespace fracop

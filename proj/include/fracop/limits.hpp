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

#include <functional>

namespace fracop {

struct LimitResult {
  double value;
  double error;
};

/// lim_{ε→0+} g(ε), sampled at ε = scale·10^{-1} … scale·10^{-7} and
/// accelerated with Wynn's epsilon algorithm, which removes up to three
/// power-law terms ε^α, ε^β, ε^γ exactly. Stops early once successive samples
/// agree to roundoff. Throws NumericalError when the samples oscillate or
/// move away from each other.
LimitResult one_sided_limit(const std::function<double(double)>& g, double scale);

}  // namespace fracop

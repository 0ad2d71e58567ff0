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

#include "fracop/integrand.hpp"

#include <utility>

#include "fracop/errors.hpp"
#include "fracop/psi.hpp"

namespace fracop {

Integrand::Integrand(std::function<double(double)> f, std::string tag)
    : max_order_(0), tag_(std::move(tag)) {
  eval_ = [f = std::move(f)](const Site& site, std::span<double> out) {
    out[0] = f(site.x);
  };
}

Integrand::Integrand(Evaluator eval, int max_order, std::string map_key,
                     std::string tag)
    : eval_(std::move(eval)),
      max_order_(max_order),
      map_key_(std::move(map_key)),
      tag_(std::move(tag)) {}

double Integrand::value(const Site& site) const {
  double v = 0.0;
  eval_(site, std::span<double>(&v, 1));
  return v;
}

void Integrand::evaluate(const Site& site, std::span<double> out) const {
  if (out.empty()) return;
  if (static_cast<int>(out.size()) - 1 > max_order_) {
    throw DomainError("integrand '" + tag_ + "' has derivatives only up to order " +
                      std::to_string(max_order_));
  }
  eval_(site, out);
}

bool Integrand::has_derivatives(const MonotoneMap& map, int n) const {
  if (n == 0) return true;
  return n <= max_order_ && map_key_ == map.key();
}

}  // namespace fracop

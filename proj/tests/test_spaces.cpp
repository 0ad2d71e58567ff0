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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracop/catalogue.hpp"
#include "fracop/errors.hpp"
#include "fracop/oracles.hpp"
#include "fracop/spaces.hpp"

using namespace fracop;

namespace {

const double e = std::numbers::e;

SpaceSpec space(const MonotoneMap& map, double p, double c, Interval iv) {
  return SpaceSpec{.map = map, .p = p, .c = c, .interval = iv};
}

}  // namespace

TEST_CASE("weighted norms") {
  const auto id = make_builtin("identity");
  const Integrand one([](double) { return 1.0; });
  const Integrand inv([](double x) { return 1.0 / x; });
  const Integrand lg([](double x) { return std::log(x); });
  CHECK(x_norm(space(id, 1.0, 0.0, {1.0, e}), one) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x_norm(space(id, 2.0, 1.0, {1.0, e}), inv) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(x_norm(space(id, kInfinityNorm, 0.0, {1.0, e}), lg) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(x_norm(space(id, 3.0, 0.5, {1.0, e}), Integrand([](double) { return 0.0; })) == 0.0);
  // Absolute homogeneity.
  const Integrand f([](double x) { return std::sin(x); });
  const Integrand g([](double x) { return -2.5 * std::sin(x); });
  const auto sp = space(make_builtin("sqrt"), 1.5, -0.3, {1.0, 4.0});
  CHECK(x_norm(sp, g) == doctest::Approx(2.5 * x_norm(sp, f)).epsilon(1e-10));
  CHECK(lp_norm(one, 2.0, {1.0, 5.0}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(x_norm(space(id, 0.5, 0.0, {1.0, e}), one), DomainError);
}

TEST_CASE("boundedness constant") {
  const auto sp = space(make_builtin("identity"), 2.0, 0.0, {1.0, e});
  CHECK(bound_constant_k(0.5, 0.0, 0.0, sp) == doctest::Approx(1.1283791671).epsilon(1e-10));
  CHECK(bound_constant_k(1.0, 1.0, 0.0, sp) == doctest::Approx(0.6321205588).epsilon(1e-10));
  CHECK(bound_constant_k(1.0, 0.3, 0.3, sp) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(bound_constant_k(0.5, 0.0, 1.0, sp), DomainError);
}

TEST_CASE("integral is bounded by K in the weighted space") {
  const auto map = make_builtin("sqrt");
  const Interval iv{1.0, 4.0};
  const auto f = (catalogue::logpow(map, 1.5, 0.0, 1.0) + catalogue::constant(map, 0.5)).integrand();
  for (double p : {1.0, 2.0, kInfinityNorm}) {
    for (double c : {0.0, 0.5}) {
      for (double s : {c, c + 1.0}) {
        for (double mu : {0.4, 1.3}) {
          const auto sp = space(map, p, c, iv);
          const auto If = as_integrand(OperatorSpec{.map = map, .mu = mu, .s = s, .anchor = 1.0}, f);
          CHECK(x_norm(sp, If) <= bound_constant_k(mu, s, c, sp) * x_norm(sp, f) * (1 + 1e-6));
        }
      }
    }
  }
}

TEST_CASE("Hoelder bound") {
  const auto id = make_builtin("identity");
  const auto sp = space(id, 4.0, 0.0, {1.0, e});
  CHECK(holder_estimate_bound(0.5, 1.0, 4.0, sp, 1.0, 1.5, 1.5) == 0.0);
  // μ < 1: 2 (log x2/x1)^{μ-1/p} / (Γ(μ) (q(μ-1)+1)^{1/q}) · e^s ‖Ψ'‖^{1/p}
  const double q = 4.0 / 3.0;
  const double expected = std::exp(1.0) * 2.0 / (std::tgamma(0.5) * std::pow(q * -0.5 + 1.0, 1.0 / q));
  CHECK(holder_estimate_bound(0.5, 1.0, 4.0, sp, 1.0, 1.0, e) == doctest::Approx(expected).epsilon(1e-12));
  double prev = 0.0;
  for (double x2 = 1.1; x2 <= e; x2 += 0.1) {
    const double b = holder_estimate_bound(1.4, 0.5, 2.0, sp, 1.0, 1.05, x2);
    CHECK(b >= prev);
    prev = b;
  }
  CHECK_THROWS_AS(holder_estimate_bound(0.5, 1.0, 1.5, sp, 1.0, 1.0, 2.0), DomainError);
  CHECK_THROWS_AS(holder_estimate_bound(0.5, 1.0, 4.0, space(id, 4.0, 0.0, {1.0, 3.0}), 1.0, 1.0, 2.0),
                  DomainError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(1.0, e);
  const auto f = (catalogue::logpow(id, 1.7, 0.0, 1.0) + catalogue::constant(id, -0.4)).integrand();
  for (double mu : {0.5, 1.0, 1.6}) {
    const double p = 3.0;
    const double s = 0.8;
    const double fn = lp_norm(f, p, {1.0, e});
    const auto If = as_integrand(OperatorSpec{.map = id, .mu = mu, .s = s, .anchor = 1.0}, f);
    for (int i = 0; i < 20; ++i) {
      double x1 = unif(rng), x2 = unif(rng);
      if (x1 > x2) std::swap(x1, x2);
      const double lhs = std::abs(std::pow(x2, s) * If(x2) - std::pow(x1, s) * If(x1));
      CHECK(lhs <= holder_estimate_bound(mu, s, p, sp, fn, x1, x2) * (1 + 1e-6));
    }
  }
}

TEST_CASE("representation reconstruct and extract") {
  const auto id = make_builtin("identity");
  const auto sp = space(id, 2.0, 0.0, {1.0, e});
  CHECK(ac_reconstruct({1, 0.0, [](double) { return 0.0; }, {1.0}}, sp, 2.0) == doctest::Approx(1.0));
  CHECK(ac_reconstruct({1, 0.0, [](double) { return 1.0; }, {0.0}}, sp, e) ==
        doctest::Approx(e - 1.0).epsilon(1e-12));
  CHECK(ac_reconstruct({2, 0.0, [](double) { return 0.0; }, {0.0, 1.0}}, sp, 2.0) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-14));

  const auto sq = make_builtin("sqrt");
  const auto sp2 = space(sq, 2.0, 0.0, {1.0, 4.0});
  for (int n : {1, 2}) {
    const AcRepresentation rep{n, 0.7, [](double x) { return std::cos(x) + x; },
                               n == 1 ? std::vector<double>{0.4} : std::vector<double>{0.4, -1.2}};
    const auto g = ac_function(rep, sp2);
    const auto back = extract(g, n, 0.7, sp2);
    for (int k = 0; k < n; ++k) CHECK(back.constants[k] == doctest::Approx(rep.constants[k]).epsilon(1e-10));
    for (double x : {1.2, 2.5, 3.9}) {
      CHECK(back.density(x) == doctest::Approx(rep.density(x)).epsilon(1e-9));
      CHECK(ac_reconstruct(back, sp2, x) == doctest::Approx(g(x)).epsilon(1e-9));
    }
    for (double mu : {n - 0.6, n - 0.1}) {
      const OperatorSpec spec{.map = sq, .kind = Kind::DerivativeRL, .mu = mu, .s = 0.7, .anchor = 1.0};
      for (double x : {1.5, 3.0}) {
        CHECK(rl_derivative_representation(rep, mu, spec, x) ==
              doctest::Approx(frac_derivative_rl(spec, g, x)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("representation derivative reference cases") {
  const auto id = make_builtin("identity");
  const OperatorSpec spec{.map = id, .kind = Kind::DerivativeRL, .mu = 0.5, .s = 0.0, .anchor = 1.0};
  const AcRepresentation unit{1, 0.0, [](double) { return 0.0; }, {1.0}};
  CHECK(rl_derivative_representation(unit, 0.5, spec, 2.0) ==
        doctest::Approx(std::pow(std::log(2.0), -0.5) / std::sqrt(std::numbers::pi)).epsilon(1e-13));

  const auto g = catalogue::logpow(id, 2.0, 1.0, 1.0).integrand();
  const auto sp = space(id, 2.0, 0.0, {1.0, e});
  const auto rep = extract(g, 1, 1.0, sp);
  const OperatorSpec tempered{.map = id, .kind = Kind::DerivativeRL, .mu = 0.5, .s = 1.0, .anchor = 1.0};
  CHECK(rl_derivative_representation(rep, 0.5, tempered, e) ==
        doctest::Approx(logpow_derivative_closed_form({2.0, id, 1.0, 1.0}, 0.5, e)).epsilon(1e-8));
  const double near = rl_derivative_representation(rep, 1.0 - 1e-6, tempered, 2.0);
  CHECK(std::abs(near - apply_delta({id, 1.0, 1}, g, 2.0)) < 1e-4);
}

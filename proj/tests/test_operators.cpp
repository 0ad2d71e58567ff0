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

#include "fracop/catalogue.hpp"
#include "fracop/errors.hpp"
#include "fracop/limits.hpp"
#include "fracop/operators.hpp"
#include "fracop/specialfn.hpp"

using namespace fracop;

namespace {

OperatorSpec make(const MonotoneMap& map, Kind kind, double mu, double s, double a,
                  Side side = Side::Left) {
  return OperatorSpec{.map = map, .kind = kind, .side = side, .mu = mu, .s = s, .anchor = a};
}

// Γ(ν)/Γ(ν+σμ) Ψ^{-s} ρ^{ν+σμ-1}
double logpow_image(const MonotoneMap& map, double nu, double signed_mu, double s,
                    double a, double x) {
  const double rho = map.log_value(x) - map.log_value(a);
  return std::exp(std::lgamma(nu) - std::lgamma(nu + signed_mu)) *
         std::pow(map.value(x), -s) * std::pow(rho, nu + signed_mu - 1.0);
}

bool close(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::max(1.0, std::abs(want));
}

}  // namespace

TEST_CASE("reference values") {
  const auto id = make_builtin("identity");
  const auto f = catalogue::logpow(id, 2.0, 1.0, 1.0).integrand();
  const double e = std::numbers::e;
  CHECK(frac_integral(make(id, Kind::Integral, 0.5, 1.0, 1.0), f, e) ==
        doctest::Approx(0.2767383316).epsilon(1e-9));
  CHECK(frac_derivative_rl(make(id, Kind::DerivativeRL, 0.5, 1.0, 1.0), f, e) ==
        doctest::Approx(0.4151074974).epsilon(1e-9));

  const auto one = catalogue::constant(id, 1.0).integrand();
  CHECK(frac_integral(make(id, Kind::Integral, 1.0, 0.0, 1.0), one, e) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(frac_integral(make(id, Kind::Integral, 0.7, 1.0, 1.0), one, 1.0) == 0.0);

  const auto ex = make_builtin("exp");
  const Integrand x_fn([](double x) { return x; });
  CHECK(frac_derivative_caputo(make(ex, Kind::DerivativeCaputo, 0.5, 0.0, 0.0), x_fn, 1.0) ==
        doctest::Approx(2.0 / std::sqrt(std::numbers::pi)).epsilon(1e-7));
  const Integrand sq([](double x) { return x * x; });
  CHECK(frac_derivative_rl(make(ex, Kind::DerivativeRL, 1.0, 0.0, 0.0), sq, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("log-power images on every builtin map") {
  for (const char* name : {"identity", "sqrt", "power:2", "exp"}) {
    const auto map = parse_map(name);
    const double a = std::string(name) == "exp" ? 0.0 : 1.0;
    for (double s : {0.0, 1.0}) {
      for (double nu : {0.6, 2.0, 3.3}) {
        const auto f = catalogue::logpow(map, nu, s, a).integrand();
        for (double mu : {0.3, 0.7, 1.2, 2.5}) {
          for (double x : {a + 0.4, a + 1.7}) {
            CAPTURE(name); CAPTURE(s); CAPTURE(nu); CAPTURE(mu); CAPTURE(x);
            const double I = frac_integral(make(map, Kind::Integral, mu, s, a), f, x);
            CHECK(close(I, logpow_image(map, nu, mu, s, a, x), 1e-8));
            const double D = frac_derivative_rl(make(map, Kind::DerivativeRL, mu, s, a), f, x);
            const double want = std::exp(std::lgamma(nu)) *
                                specialfn::reciprocal_gamma(nu - mu) *
                                std::pow(map.value(x), -s) *
                                std::pow(map.log_value(x) - map.log_value(a), nu - mu - 1.0);
            CHECK(close(D, want, 1e-8));
          }
        }
      }
    }
  }
}

TEST_CASE("right-sided operators mirror the left ones") {
  const auto map = make_builtin("sqrt");
  const double b = 4.0;
  for (double s : {0.0, 1.5}) {
    const auto f = catalogue::logpow_right(map, 1.8, s, b).integrand();
    for (double mu : {0.4, 1.3}) {
      for (double x : {1.2, 3.0}) {
        const double rho = map.log_value(b) - map.log_value(x);
        const double scale = std::pow(map.value(x), s);
        const double I = frac_integral(make(map, Kind::Integral, mu, s, b, Side::Right), f, x);
        CHECK(close(I, std::exp(std::lgamma(1.8) - std::lgamma(1.8 + mu)) * scale *
                           std::pow(rho, 0.8 + mu), 1e-8));
        const double D =
            frac_derivative_rl(make(map, Kind::DerivativeRL, mu, s, b, Side::Right), f, x);
        CHECK(close(D, std::exp(std::lgamma(1.8)) * specialfn::reciprocal_gamma(1.8 - mu) *
                           scale * std::pow(rho, 0.8 - mu), 1e-8));
      }
    }
  }
}

TEST_CASE("derivative paths agree") {
  const auto map = make_builtin("power", std::vector<double>{2.0});
  const auto series = catalogue::logpow(map, 2.5, 0.5, 1.0) + catalogue::logpoly(map, {1.0, 0.5}, 1.0);
  const auto f = series.integrand();
  const Integrand plain([g = f](double x) { return g(x); });
  for (double mu : {0.4, 1.6}) {
    const auto spec = make(map, Kind::DerivativeRL, mu, 0.5, 1.0);
    for (double x : {1.3, 2.2}) {
      const double dil = evaluate(spec, f, x, {.path = DerivativePath::Dilation}).value;
      const double rep = evaluate(spec, f, x, {.path = DerivativePath::Representation}).value;
      const double dir = evaluate(spec, plain, x).value;
      CHECK(close(rep, dil, 1e-9));
      CHECK(close(dir, dil, 1e-5));
    }
  }
}

TEST_CASE("anchor behaviour and integer orders") {
  const auto map = make_builtin("identity");
  const auto f = catalogue::logpoly(map, {1.0, 2.0, 0.5}, 1.0).integrand();
  CHECK_THROWS_AS(frac_derivative_rl(make(map, Kind::DerivativeRL, 0.5, 0.0, 1.0), f, 1.0),
                  BoundaryError);
  CHECK_THROWS_AS(frac_integral(make(map, Kind::Integral, 0.5, 0.0, 2.0), f, 1.0), DomainError);
  const DeltaOperatorSpec d2{map, 0.7, 2};
  CHECK(frac_derivative_rl(make(map, Kind::DerivativeRL, 2.0, 0.7, 1.0), f, 2.0) ==
        doctest::Approx(apply_delta(d2, f, 2.0)).epsilon(1e-14));
  CHECK(frac_derivative_caputo(make(map, Kind::DerivativeCaputo, 2.0, 0.7, 1.0), f, 2.0) ==
        doctest::Approx(apply_delta(d2, f, 2.0)).epsilon(1e-14));
  // Caputo just below an integer approaches δ^n.
  const double near = frac_derivative_caputo(
      make(map, Kind::DerivativeCaputo, 1.0 - 1e-6, 0.7, 1.0), f, 2.0);
  CHECK(std::abs(near - apply_delta({map, 0.7, 1}, f, 2.0)) < 1e-4);
  // δ annihilates Ψ^{-s}.
  const auto killed = catalogue::psi_power(map, -0.7).integrand();
  CHECK(std::abs(frac_derivative_caputo(make(map, Kind::DerivativeCaputo, 0.6, 0.7, 1.0),
                                        killed, 2.0)) < 1e-12);
}

TEST_CASE("nested operators through as_integrand") {
  const auto map = make_builtin("sqrt");
  const auto f = (catalogue::logpow(map, 1.5, 1.0, 1.0) + catalogue::constant(map, 1.0)).integrand();
  const auto inner = as_integrand(make(map, Kind::Integral, 0.7, 1.0, 1.0), f);
  CHECK(inner.max_order() == LogSeries::kMaxOrder);
  for (double x : {1.5, 2.8}) {
    const double nested = frac_integral(make(map, Kind::Integral, 0.3, 1.0, 1.0), inner, x);
    const double direct = frac_integral(make(map, Kind::Integral, 1.0, 1.0, 1.0), f, x);
    CHECK(close(nested, direct, 1e-9));
    const double back = frac_derivative_rl(make(map, Kind::DerivativeRL, 0.7, 1.0, 1.0), inner, x);
    CHECK(close(back, f(x), 1e-8));
  }
}

TEST_CASE("conjugation pipelines reproduce the integral") {
  for (const char* name : {"identity", "power:2"}) {
    const auto map = parse_map(name);
    const auto f = catalogue::logpow(map, 2.2, 0.8, 1.0).integrand();
    const auto spec = make(map, Kind::Integral, 0.6, 0.8, 1.0);
    for (double x : {1.4, 2.9}) {
      const double ref = frac_integral(spec, f, x);
      CHECK(close(conjugation_h(spec, f, x), ref, 1e-8));
      CHECK(close(conjugation_t(spec, f, x), ref, 1e-8));
    }
  }
  const auto id = make_builtin("identity");
  const RealFn g = [](double x) { return std::sin(x); };
  CHECK(compose_q(id, g)(0.3) == g(0.3));
  CHECK(compose_m([](double) { return 1.0; }, g)(0.3) == g(0.3));
}

TEST_CASE("special-case reductions") {
  CHECK(reduce_special_case(make(make_builtin("identity"), Kind::Integral, 0.5, 0.0, 1.0)).name ==
        "Hadamard");
  CHECK(reduce_special_case(make(make_builtin("identity"), Kind::Integral, 0.5, 2.5, 1.0)).name ==
        "Hadamard-type");
  CHECK(reduce_special_case(make(make_builtin("exp"), Kind::DerivativeRL, 0.5, 0.0, 0.0)).name ==
        "RL");
  CHECK(reduce_special_case(make(make_builtin("exp"), Kind::DerivativeCaputo, 0.5, 0.0, 0.0)).name ==
        "Caputo-classical");
  CHECK(reduce_special_case(make(make_builtin("exp"), Kind::Integral, 0.5, 1.0, 0.0)).name ==
        "tempered");
  CHECK(reduce_special_case(make(parse_map("exp_power:2"), Kind::Integral, 0.5, 0.0, 1.0)).name ==
        "Katugampola");
  CHECK(reduce_special_case(make(make_builtin("sqrt"), Kind::Integral, 0.5, 0.0, 1.0)).name ==
        "RL-wrt-phi");
  CHECK(reduce_special_case(make(make_builtin("sqrt"), Kind::Integral, 0.5, 1.0, 1.0)).name ==
        "tempered-wrt-phi");
}

TEST_CASE("one-sided limits remove several power terms") {
  const auto g = [](double e) { return 2.0 + std::pow(e, 0.3) * (1.0 + 0.7 * e + 0.2 * e * e); };
  CHECK(one_sided_limit(g, 1.0).value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(one_sided_limit([](double) { return 3.5; }, 1.0).value == 3.5);
  CHECK_THROWS_AS(one_sided_limit([](double e) { return std::pow(e, -0.3); }, 1.0), NumericalError);
  CHECK_THROWS_AS(one_sided_limit([](double e) { return std::sin(1.0 / e); }, 1.0), NumericalError);
  CHECK_THROWS_AS(one_sided_limit([](double) { return 1.0; }, 0.0), DomainError);
}

TEST_CASE("derivative at its anchor through the one-sided limit") {
  const auto id = make_builtin("identity");
  const auto f = catalogue::logpow(id, 2.0, 1.0, 1.0).integrand();
  const OperatorSpec rl{.map = id, .kind = Kind::DerivativeRL, .mu = 0.5, .s = 1.0, .anchor = 1.0};
  CHECK_THROWS_AS(evaluate(rl, f, 1.0), BoundaryError);
  CHECK(std::abs(evaluate_with_limit(rl, f, 1.0, 4.0).value) < 1e-9);
  // logpow(μ) has a finite nonzero value Γ(μ) at the anchor of D^{μ-1}.
  const auto g = catalogue::logpow(id, 1.5, 0.0, 1.0).integrand();
  const OperatorSpec half{.map = id, .kind = Kind::DerivativeRL, .mu = 0.5, .s = 0.0, .anchor = 1.0};
  CHECK(evaluate_with_limit(half, g, 1.0, 2.0).value == doctest::Approx(std::tgamma(1.5)).epsilon(1e-9));
  CHECK(evaluate_with_limit(half, g, 2.0, 2.0).value == doctest::Approx(evaluate(half, g, 2.0).value));
}

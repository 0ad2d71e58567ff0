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
#include "fracop/psi.hpp"

using namespace fracop;

TEST_CASE("builtin maps at reference points") {
  const auto id = make_builtin("identity");
  CHECK(id.value(2.0) == 2.0);
  CHECK(id.derivative(2.0) == 1.0);
  CHECK(id.log_value(2.0) == doctest::Approx(0.6931471806).epsilon(1e-10));

  const auto ex = make_builtin("exp");
  CHECK(ex.value(1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  CHECK(ex.derivative(1.0) == doctest::Approx(std::numbers::e).epsilon(1e-15));
  CHECK(ex.log_value(1.0) == 1.0);

  const auto sq = parse_map("power:2");
  CHECK(sq.value(3.0) == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(sq.derivative(3.0) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(sq.inverse(9.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(sq.tag() == "power:2");
}

TEST_CASE("builtin parsing rejects bad input") {
  CHECK_THROWS_AS(parse_map("cubic"), DomainError);
  CHECK_THROWS_AS(parse_map("power:-1"), DomainError);
  CHECK_THROWS_AS(parse_map("power:0"), DomainError);
  CHECK_THROWS_AS(parse_map("power:abc"), DomainError);
  CHECK_THROWS_AS(parse_map("exp_power:0"), DomainError);
}

TEST_CASE("validation of catalogue and custom maps") {
  CHECK(validate(make_builtin("identity"), {1.0, 5.0}, 101).ok());
  CHECK(validate(make_builtin("sqrt"), {1.0, 5.0}, 101).ok());
  CHECK(validate(parse_map("exp_power:0.5"), {0.5, 3.0}, 101).ok());
  CHECK(validate(make_builtin("exp"), {-2.0, 2.0}, 101).ok());

  const auto neg = MonotoneMap::custom([](double x) { return -x; },
                                       [](double) { return -1.0; }, {0.5, 3.0});
  const auto report = validate(neg, {1.0, 2.0}, 11);
  int positivity = 0;
  for (const auto& v : report.violations) positivity += (v.what == "positivity");
  CHECK(positivity == 11);

  CHECK_THROWS_AS(validate(make_builtin("identity"), {-1.0, 2.0}, 11), DomainError);
}

TEST_CASE("custom map inverse by bisection") {
  const auto cubic = MonotoneMap::custom([](double x) { return x * x * x + x; },
                                         [](double x) { return 3 * x * x + 1; }, {0.1, 10.0});
  CHECK(validate(cubic, {0.5, 4.0}, 51).ok());
  CHECK(cubic.inverse(cubic.value(2.3)) == doctest::Approx(2.3).epsilon(1e-13));
  CHECK(cubic.key() != make_builtin("identity").key());
}

TEST_CASE("log increments are accurate for tiny steps") {
  for (const char* tag : {"identity", "sqrt", "power:2", "exp", "exp_power:0.5"}) {
    const auto m = parse_map(tag);
    const double x = 1.3;
    const double d = 1e-12;
    const double want = d * m.dlog(x);
    CHECK(std::abs(m.log_increment(x, d) - want) <= 1e-9 * std::abs(want));
    CHECK(m.inverse_log(m.log_value(x)) == doctest::Approx(x).epsilon(1e-14));
  }
}

TEST_CASE("apply_delta reference values") {
  const auto id = make_builtin("identity");
  const Integrand logx([](double x) { return std::log(x); });
  CHECK(apply_delta({id, 0.0, 1}, logx, 2.0) == doctest::Approx(1.0).epsilon(1e-9));
  const Integrand g([](double x) { return std::log(x) / x; });
  CHECK(apply_delta({id, 1.0, 1}, g, std::numbers::e) ==
        doctest::Approx(1.0 / std::numbers::e).epsilon(1e-9));
  const Integrand h([](double x) { return std::sin(x); });
  CHECK(apply_delta({parse_map("power:2"), 0.7, 0}, h, 1.2) == std::sin(1.2));
}

TEST_CASE("delta with Psi=exp is f' + s f") {
  const auto ex = make_builtin("exp");
  const Integrand f([](double x) { return std::sin(x) + x * x; });
  for (double s : {0.0, 0.5, -1.0, 2.0}) {
    for (double x = -1.0; x <= 2.0; x += 0.25) {
      const double want = std::cos(x) + 2 * x + s * (std::sin(x) + x * x);
      CHECK(std::abs(apply_delta({ex, s, 1}, f, x) - want) <= 1e-8);
    }
  }
}

TEST_CASE("delta for Psi=identity, s=0 is x d/dx") {
  const auto id = make_builtin("identity");
  const Integrand f([](double x) { return x * x * x; });
  for (double x = 0.5; x <= 3.0; x += 0.5) {
    CHECK(apply_delta({id, 0.0, 1}, f, x) == doctest::Approx(3 * x * x * x).epsilon(1e-9));
  }
}

TEST_CASE("delta composes") {
  const auto sq = make_builtin("sqrt");
  const auto f = (catalogue::logpow(sq, 3.5, 0.6, 1.0) + catalogue::logpoly(sq, {1.0, 0.5}, 1.0))
                     .integrand();
  const double s = 0.6;
  for (int k = 1; k <= 2; ++k) {
    for (int m = 1; m <= 2; ++m) {
      const Integrand inner([&](double x) { return apply_delta({sq, s, m}, f, x); });
      for (double x : {1.5, 2.0, 2.7}) {
        const double lhs = apply_delta({sq, s, k}, inner, x);
        const double rhs = apply_delta({sq, s, k + m}, f, x);
        CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("numeric derivatives match analytic catalogue derivatives") {
  for (const char* tag : {"identity", "sqrt", "power:2", "exp"}) {
    const auto m = parse_map(tag);
    const double a = std::string(tag) == "exp" ? 0.0 : 1.0;
    const auto cat = catalogue::logpow(m, 2.5, 0.7, a) + catalogue::psi_power(m, -1.0);
    const auto analytic = cat.integrand();
    const Integrand plain([&](double x) { return analytic(x); });
    for (int n = 1; n <= 4; ++n) {
      const double x = a + 1.1;
      const double want = apply_delta({m, 0.7, n}, analytic, x);
      const double got = apply_delta({m, 0.7, n}, plain, x);
      CHECK(std::abs(got - want) <= 1e-5 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("numeric stencil shifts inside a window") {
  const auto id = make_builtin("identity");
  const Integrand f([](double x) { return std::sqrt(x - 1.0) + x * x; });
  // Right next to x = 1 a central stencil would sample outside [1, 3].
  const double x = 1.05;
  const double want = x * (0.5 / std::sqrt(x - 1.0) + 2 * x);
  const double got = apply_delta({id, 0.0, 1}, f, x, Interval{1.0, 3.0});
  CHECK(std::abs(got - want) <= 1e-5 * std::abs(want));
  CHECK_THROWS_AS(apply_delta({id, 0.0, 5}, f, 2.0), DomainError);
}

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

#include "fracop/verify.hpp"

#include <doctest.h>

#include "fracop/errors.hpp"

using namespace fracop;

TEST_CASE("unit_uniform maps 64-bit words into [0, 1)") {
  CHECK(unit_uniform(0) == 0.0);
  CHECK(unit_uniform(~0ULL) < 1.0);
  CHECK(unit_uniform(1ULL << 63) == doctest::Approx(0.5));
}

TEST_CASE("suite registry") {
  CHECK(suite_ids().size() == 6);
  CHECK_THROWS_AS(run_suite("nope"), DomainError);
}

TEST_CASE("limits suite passes and reports deterministically") {
  SuiteOptions opts{.threads = 4};
  const auto a = check_limits(opts);
  opts.threads = 1;
  const auto b = check_limits(opts);
  CHECK(a.passed);
  CHECK(to_text(a) == to_text(b));
  CHECK(to_json_lines(a) == to_json_lines(b));
  CHECK(to_text(a).find("wall=") == std::string::npos);
  CHECK(to_text(a, true).find("wall=") != std::string::npos);
}

TEST_CASE("a tightened tolerance is reported as a violation") {
  SuiteOptions opts{.tol_scale = 0.0};
  const auto r = check_limits(opts);
  CHECK_FALSE(r.passed);
  CHECK(to_text(r).find("FAIL") != std::string::npos);
}

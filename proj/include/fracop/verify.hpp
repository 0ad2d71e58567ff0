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

/// Verification suites. Each suite evaluates an identity of the operator
/// family on a parameter grid and records one residual per case.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fracop {

enum class CaseStatus { Passed, Violated, EvaluationFailed };

struct CaseRecord {
  std::string name;
  std::string params;
  double residual = 0.0;
  double tolerance = 0.0;
  CaseStatus status = CaseStatus::Passed;
  std::string message;  // set when evaluation failed

  bool passed() const { return status == CaseStatus::Passed; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 42;
  std::vector<CaseRecord> cases;
  double max_residual = 0.0;
  bool passed = true;
  double wall_seconds = 0.0;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

SuiteReport check_semigroup(const SuiteOptions& opts = {});
SuiteReport check_equivalence(const SuiteOptions& opts = {});
SuiteReport check_newton_leibniz(const SuiteOptions& opts = {});
SuiteReport check_integration_by_parts(const SuiteOptions& opts = {});
SuiteReport check_limits(const SuiteOptions& opts = {});
SuiteReport check_norm_bounds(const SuiteOptions& opts = {});

/// Suite ids in run order: semigroup, equivalence, newton-leibniz,
/// int-by-parts, limits, norm-bounds.
const std::vector<std::string>& suite_ids();
/// Runs one suite by id; throws DomainError for unknown ids.
SuiteReport run_suite(std::string_view id, const SuiteOptions& opts = {});

/// Uniform double in [0, 1) from a 64-bit draw, identical on every platform.
double unit_uniform(std::uint64_t bits);

/// One line per case plus a summary line. Wall time is written only when
/// asked, so reports of identical runs compare equal byte for byte.
std::string to_text(const SuiteReport& report, bool with_timing = false);
std::string to_json_lines(const SuiteReport& report, bool with_timing = false);

}  // namespace fracop

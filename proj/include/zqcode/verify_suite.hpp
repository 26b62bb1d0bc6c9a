/*
   Copyright 2026 The zqcode authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ZQCODE_VERIFY_SUITE_HPP
#define ZQCODE_VERIFY_SUITE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zqcode {

/// Options for the acceptance battery.
struct VerifyOptions {
    /// Check all 2,704,156 maximal minors of the large generator matrix
    /// instead of a random sample (slow; tens of minutes on one core).
    bool full_minors = false;
    std::uint64_t minor_samples = 10000;
    std::uint64_t minor_seed = 24036583;
    /// Thread cap for the enumeration kernels; 0 = library default.
    int threads = 0;
};

/// Outcome of one acceptance criterion.  A criterion passes only if every
/// check inside it holds and the wall time stays within its pinned budget.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    double ms = 0.0;
    double budget_ms = 0.0;
    std::string detail;
};

std::string format_result_line(const CriterionResult& r);

/// Runs the fourteen acceptance criteria in order.  When live is nonnull,
/// each finished criterion is written to it immediately as one line.
std::vector<CriterionResult> run_verify_suite(const VerifyOptions& opts = {},
                                              std::ostream* live = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace zqcode

#endif

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

// Runs the fourteen-point acceptance battery and prints one line per
// criterion.  Exit status 0 iff everything passed.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "zqcode/verify_suite.hpp"

int main(int argc, char** argv) {
    zqcode::VerifyOptions opts;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&](const char* flag) -> std::string {
            if (i + 1 >= argc) {
                std::cerr << flag << " needs a value\n";
                std::exit(2);
            }
            return argv[++i];
        };
        if (arg == "--full") {
            opts.full_minors = true;
        } else if (arg == "--samples") {
            opts.minor_samples = std::strtoull(next("--samples").c_str(), nullptr, 10);
        } else if (arg == "--seed") {
            opts.minor_seed = std::strtoull(next("--seed").c_str(), nullptr, 10);
        } else if (arg == "--threads") {
            opts.threads = static_cast<int>(std::strtol(next("--threads").c_str(), nullptr, 10));
        } else {
            std::cerr << "usage: acceptance [--full] [--samples N] [--seed N] [--threads N]\n";
            return 2;
        }
    }

    const auto results = zqcode::run_verify_suite(opts, &std::cout);
    const bool ok = zqcode::all_passed(results);
    std::cout << (ok ? "acceptance: all 14 criteria passed"
                     : "acceptance: FAILURES present")
              << std::endl;
    return ok ? 0 : 1;
}

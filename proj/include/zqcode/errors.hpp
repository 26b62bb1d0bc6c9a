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

#ifndef ZQCODE_ERRORS_HPP
#define ZQCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zqcode {

/* Domain error codes surfaced by the library and rendered as JSON by the CLI. */
enum class errc {
    non_unit,
    not_a_root,
    not_simple_root,
    no_square_root,
    ring_mismatch,
    not_monic,
    non_unit_constant_term,
    not_coprime,
    infinite_mode_unsupported,
    budget_exceeded,
    bad_length,
    invalid_argument,
    internal_check_failed
};

const char* errc_name(errc code) noexcept;

class domain_error : public std::runtime_error {
  public:
    domain_error(errc code, const std::string& message, std::string context = "")
        : std::runtime_error(message), code_(code), context_(std::move(context)) {}

    errc code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

  private:
    errc code_;
    std::string context_;
};

/* Internal invariant check: throws a domain_error that indicates a library bug
   rather than bad input.  Used for verified postconditions. */
void require(bool condition, const std::string& message);

} // namespace zqcode

#endif

/*
   Copyright 2026 The chevtool Authors

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

/**
 * @file cli.hpp
 * @brief Run configuration, validation and dispatch behind the chevtool CLI.
 *
 * dispatch() renders the whole report into a string so that callers (the CLI,
 * the acceptance suite) can compare runs byte for byte. JSON numbers are
 * always decimal strings.
 *
 * Exit codes: 0 success, 1 usage or precondition error, 2 verification failure.
 */

#ifndef CHEV_CLI_HPP
#define CHEV_CLI_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "chev/scheme.hpp"

namespace chev {

enum class OutputFormat { Text, Json, Csv };
enum class FieldPolicy { Auto, Prime, Quadratic, Rational };

OutputFormat parse_format(const std::string& s);
FieldPolicy parse_field_policy(const std::string& s);

struct RunConfig {
    std::string command;
    /// bound: iso, goodfil, chardin or lemma31
    std::string bound_kind;
    std::optional<GroupKind> group;
    unsigned n = 2, d = 1;
    std::uint32_t p = 101;
    unsigned min_degree = 0, max_degree = 2;
    FieldPolicy field = FieldPolicy::Auto;
    OutputFormat format = OutputFormat::Text;
    std::string cache_dir;
    /// 0 selects the hardware concurrency
    unsigned threads = 1;

    // command-specific inputs
    /// betti: ibar or quotient; certificate: ibar, free or quotient; invariants: free, quotient or ambient
    std::string module;
    unsigned k = 0, dim_f = 1, dim_g = 1;       ///< cauchy
    std::int64_t reg = 1, alpha = 0;            ///< bound goodfil / lemma31
    unsigned kappa = 2, vars = 2, m = 1;        ///< bound chardin / lemma31
    /// certificate: synthetic character "w1,w2:c w1,w2:c ..."
    std::string character;
    bool with_ambient = false, with_split = false;  ///< phi-check extras
    bool next_prime = false;                        ///< bound: also report the least prime above the value
};

class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Throws UsageError naming the first violated precondition.
void validate(const RunConfig& cfg);

struct DispatchResult {
    int exit_code;
    std::string output;
    std::string error;
};

DispatchResult dispatch(const RunConfig& cfg);

}  // namespace chev

#endif

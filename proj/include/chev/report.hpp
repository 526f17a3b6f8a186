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
 * @file report.hpp
 * @brief JSON forms of the module results. Key order is fixed and every
 *        integer is written as a decimal string.
 */

#ifndef CHEV_REPORT_HPP
#define CHEV_REPORT_HPP

#include <string>

#include "chev/betti.hpp"
#include "chev/characters.hpp"
#include "chev/chevalley.hpp"
#include "json.hpp"

namespace chev {

using Json = nlohmann::ordered_json;

template <class T>
std::string int_string(const T& v) {
    if constexpr (std::is_same_v<T, BigInt>)
        return v.str();
    else
        return std::to_string(v);
}

Json weight_json(const Weight& w);
Json to_json(const DegreeReport& r);
Json to_json(const AmbientReport& r);
Json to_json(const SplitReport& r);
Json to_json(const BettiTable& t, const Regularity& reg);
Json to_json(const WeylDecomposition& w);
Json to_json(const CertificateDegree& c);
Json to_json(const CharacterVector& c);

}  // namespace chev

#endif

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

#include "chev/report.hpp"

namespace chev {

Json weight_json(const Weight& w) {
    Json a = Json::array();
    for (int x : w) a.push_back(std::to_string(x));
    return a;
}

Json to_json(const DegreeReport& r) {
    Json j;
    j["group"] = group_name(r.group);
    j["n"] = int_string(r.n);
    j["d"] = int_string(r.d);
    j["p"] = int_string(r.p);
    j["degree"] = int_string(r.degree);
    j["dim-source"] = int_string(r.dim_source);
    j["dim-target"] = int_string(r.dim_target);
    j["dim-image"] = int_string(r.dim_image);
    j["injective"] = r.injective;
    j["surjective"] = r.surjective;
    j["image-in-target"] = r.image_in_target;
    j["weyl-order-divisible"] = r.weyl_order_divisible;
    j["field"] = r.field;
    return j;
}

Json to_json(const AmbientReport& r) {
    Json j;
    j["dim-ambient-invariants"] = int_string(r.dim_ambient);
    j["dim-image"] = int_string(r.dim_image);
    j["dim-commuting-invariants"] = int_string(r.dim_commuting);
    j["surjective"] = r.surjective();
    return j;
}

Json to_json(const SplitReport& r) {
    Json j;
    j["degree"] = int_string(r.degree);
    j["source-plus"] = int_string(r.source_plus);
    j["source-minus"] = int_string(r.source_minus);
    j["target-plus"] = int_string(r.target_plus);
    j["target-minus"] = int_string(r.target_minus);
    j["image-plus"] = int_string(r.image_plus);
    j["image-minus"] = int_string(r.image_minus);
    j["preserves-split"] = r.preserves_split;
    return j;
}

Json to_json(const BettiTable& t, const Regularity& reg) {
    Json j;
    j["window"] = int_string(t.window);
    Json e = Json::array();
    for (const auto& [ij, b] : t.entries) e.push_back(Json{{"i", int_string(ij.first)}, {"j", int_string(ij.second)}, {"beta", int_string(b)}});
    j["entries"] = e;
    j["regularity"] = reg.reg ? Json(int_string(*reg.reg)) : Json(nullptr);
    j["complete"] = reg.complete;
    return j;
}

Json to_json(const WeylDecomposition& w) {
    Json a = Json::array();
    for (const auto& [l, c] : w.coefficients) a.push_back(Json{{"weight", weight_json(l)}, {"coeff", int_string(c)}});
    return a;
}

Json to_json(const CertificateDegree& c) {
    Json j;
    j["degree"] = int_string(c.degree);
    j["status"] = certificate_status(c.pass);
    if (c.witness) j["witness"] = Json{{"weight", weight_json(c.witness->first)}, {"coeff", int_string(c.witness->second)}};
    j["decomposition"] = to_json(c.decomposition);
    return j;
}

Json to_json(const CharacterVector& c) {
    Json a = Json::array();
    for (const auto& [w, k] : c.terms) a.push_back(Json{{"weight", weight_json(w)}, {"mult", int_string(k)}});
    return a;
}

}  // namespace chev

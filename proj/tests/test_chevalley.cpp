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

#include <random>

#include "chev/chevalley.hpp"
#include "doctest.h"

using namespace chev;

namespace {

// tr(X^2) for the first generic matrix in the lie_frame coordinates
SparsePoly trace_square(const GroupSpec& spec, unsigned d, Field f) {
    GenericMatrices g = generic_matrices(lie_frame(spec, f), d);
    SparsePoly t(f, g.nvars);
    for (unsigned i = 0; i < spec.n; ++i)
        for (unsigned j = 0; j < spec.n; ++j) t += g.mats[0][i][j] * g.mats[0][j][i];
    return t;
}

SparsePoly tvar(Field f, std::size_t nv, std::size_t i) { return SparsePoly::variable(f, nv, i); }

}  // namespace

TEST_CASE("restriction to the Cartan") {
    const Field f = Field::prime(13);
    auto gl3 = group_spec(GroupKind::GL, 3);
    SparsePoly expect(f, 3);
    for (std::size_t i = 0; i < 3; ++i) expect += tvar(f, 3, i) * tvar(f, 3, i);
    CHECK(restrict_to_cartan(trace_square(gl3, 1, f), gl3, 1, f) == expect);

    auto sp2 = group_spec(GroupKind::Sp, 2);
    CHECK(restrict_to_cartan(trace_square(sp2, 1, f), sp2, 1, f) == (tvar(f, 1, 0) * tvar(f, 1, 0)).scaled(FieldElement(f, 2)));

    for (Field g : {Field::prime(13), Field::with_sqrt_minus_one(7)}) {
        auto so3 = group_spec(GroupKind::SO, 3);
        CHECK(restrict_to_cartan(trace_square(so3, 1, g), so3, 1, g) == (tvar(g, 1, 0) * tvar(g, 1, 0)).scaled(FieldElement(g, -2)));
    }
}

TEST_CASE("commutators restrict to zero and restriction is multiplicative") {
    std::mt19937 rng(5);
    for (auto [k, n] : std::vector<std::pair<GroupKind, unsigned>>{{GroupKind::GL, 2}, {GroupKind::Sp, 4}, {GroupKind::SO, 4}, {GroupKind::SO, 3}}) {
        auto spec = group_spec(k, n);
        const Field f = working_field(spec, 11);
        auto gens = commutator_generators(generic_matrices(lie_frame(spec, f), 2));
        for (const auto& g : gens) CHECK(restrict_to_cartan(g, spec, 2, f).is_zero());
        // products of random linear forms
        const std::size_t nv = 2 * spec.lie_dim;
        std::uniform_int_distribution<int> c(0, 10);
        for (int trial = 0; trial < 3; ++trial) {
            SparsePoly a(f, nv), b(f, nv);
            for (std::size_t i = 0; i < nv; ++i) {
                a += tvar(f, nv, i).scaled(FieldElement(f, c(rng)));
                b += tvar(f, nv, i).scaled(FieldElement(f, c(rng)));
            }
            CHECK(restrict_to_cartan(a * b, spec, 2, f) == restrict_to_cartan(a, spec, 2, f) * restrict_to_cartan(b, spec, 2, f));
        }
    }
}

TEST_CASE("degree reports") {
    auto gl2 = group_spec(GroupKind::GL, 2);
    DegreeReport r = phi_degree_check(gl2, 1, 7, 2);
    CHECK(r.dim_source == 2);
    CHECK(r.dim_target == 2);
    CHECK(r.dim_image == 2);
    CHECK(r.bijective());
    CHECK(r.consistent());
    DegreeReport z = phi_degree_check(group_spec(GroupKind::Sp, 4), 2, 11, 0);
    CHECK(z.dim_source == 1);
    CHECK(z.dim_target == 1);
    CHECK(z.bijective());
    DegreeReport t = phi_degree_check(gl2, 2, 101, 1);
    CHECK(t.dim_source == 2);
    CHECK(t.dim_target == 2);
    CHECK(t.dim_image == 2);
    CHECK(t.bijective());
    CHECK(phi_degree_check(gl2, 1, 7, 3).weyl_order_divisible == false);
    CHECK(phi_degree_check(group_spec(GroupKind::GL, 3), 1, 5, 1).weyl_order_divisible == false);

    for (auto [k, n, p] : std::vector<std::tuple<GroupKind, unsigned, std::uint32_t>>{
             {GroupKind::SO, 3, 7}, {GroupKind::SO, 4, 13}, {GroupKind::O, 4, 13}, {GroupKind::Sp, 4, 11}, {GroupKind::O, 3, 7}})
        for (unsigned m = 0; m <= 4; ++m) {
            DegreeReport q = phi_degree_check(group_spec(k, n), 1, p, m);
            CHECK(q.consistent());
            CHECK(q.bijective());
        }
}

TEST_CASE("invariants of the ambient space") {
    auto gl2 = group_spec(GroupKind::GL, 2);
    AmbientReport a = phi_from_ambient(gl2, 1, 7, 1);
    CHECK(a.dim_ambient == 1);
    CHECK(a.dim_image == 1);
    AmbientReport z = phi_from_ambient(gl2, 2, 7, 0);
    CHECK(z.dim_ambient == 1);
    CHECK(z.dim_image == 1);
    AmbientReport b = phi_from_ambient(gl2, 2, 101, 2);
    CHECK(b.dim_image <= b.dim_commuting);
    CHECK(b.dim_image <= b.dim_ambient);
    AmbientReport s = phi_from_ambient(group_spec(GroupKind::Sp, 2), 2, 11, 2);
    CHECK(s.dim_image <= s.dim_commuting);
}

TEST_CASE("orthogonal split") {
    SplitReport a = so_even_split_check(2, 1, 7, 1);
    CHECK(a.preserves_split);
    CHECK(a.source_minus == 1);
    CHECK(a.target_minus == 1);
    CHECK(a.image_minus == 1);
    SplitReport z = so_even_split_check(4, 1, 13, 0);
    CHECK(z.source_plus == 1);
    CHECK(z.source_minus == 0);
    CHECK(z.target_plus == 1);
    CHECK(z.target_minus == 0);
    for (unsigned m = 1; m <= 4; ++m) {
        SplitReport s = so_even_split_check(4, 1, 13, m);
        CHECK(s.preserves_split);
        DegreeReport full = phi_degree_check(group_spec(GroupKind::SO, 4), 1, 13, m);
        CHECK(s.source_plus + s.source_minus == full.dim_source);
        CHECK(s.target_plus + s.target_minus == full.dim_target);
    }
    CHECK(so_even_split_check(4, 2, 7, 2).preserves_split);
    CHECK_THROWS_AS(so_even_split_check(3, 1, 7, 1), std::invalid_argument);
}

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

#include "chev/scheme.hpp"
#include "doctest.h"

using namespace chev;

namespace {

// Oracle: the dimension of the span of the commutator entries of d generic
// n x n matrices, read off as the rank of their values at random points.
std::size_t commutator_rank_by_evaluation(unsigned n, unsigned d, std::uint32_t p, unsigned points) {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::uint64_t> u(0, p - 1);
    const std::size_t npolys = std::size_t(n) * n * d * (d - 1) / 2;
    Matrix values(Field::prime(p), npolys, points);
    const Field f = Field::prime(p);
    for (unsigned pt = 0; pt < points; ++pt) {
        std::vector<std::vector<std::vector<std::uint64_t>>> X(d, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n)));
        for (auto& m : X)
            for (auto& row : m)
                for (auto& x : row) x = u(rng);
        std::size_t idx = 0;
        for (unsigned k = 0; k < d; ++k)
            for (unsigned l = k + 1; l < d; ++l)
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j) {
                        std::uint64_t s = 0;
                        for (unsigned a = 0; a < n; ++a) {
                            s = (s + X[k][i][a] * X[l][a][j]) % p;
                            s = (s + p - (X[l][i][a] * X[k][a][j]) % p) % p;
                        }
                        values(idx++, pt) = FieldElement(f, static_cast<std::int64_t>(s));
                    }
    }
    return rank(values);
}

std::size_t span_dim(Field f, const std::vector<SparsePoly>& polys, std::size_t nvars, unsigned degree) {
    auto basis = MonomialBasis::slice(nvars, degree);
    std::vector<Vector> rows;
    for (const auto& q : polys) rows.push_back(q.to_vector(*basis));
    return LinSpace::span(f, basis->size(), rows).dim();
}

// Truncated exponential of a nilpotent root element, scaled by c.
Matrix root_element(const Matrix& e, const FieldElement& c) {
    Field f = e.field();
    Matrix ce = e.scaled(c);
    return Matrix::identity(f, e.rows()) + ce + (ce * ce).scaled(FieldElement(f, 2).inverse());
}

}  // namespace

TEST_CASE("group specs") {
    CHECK(group_spec(GroupKind::GL, 2).lie_dim == 4);
    CHECK(group_spec(GroupKind::SO, 3).lie_dim == 3);
    CHECK(group_spec(GroupKind::Sp, 4).lie_dim == 10);
    CHECK_THROWS_AS(group_spec(GroupKind::Sp, 3), std::invalid_argument);
    CHECK(parse_group("SO") == GroupKind::SO);
    CHECK_THROWS_AS(parse_group("e8"), std::invalid_argument);

    // every basis element satisfies its defining constraint
    const Field Q = Field::rationals();
    for (auto kind : {GroupKind::O, GroupKind::SO, GroupKind::Sp})
        for (unsigned n = 2; n <= 5; ++n) {
            if (kind == GroupKind::Sp && n % 2) continue;
            GroupSpec s = group_spec(kind, n);
            Matrix J = to_matrix(s.form, Q);
            for (const auto& b : s.lie_basis) {
                Matrix B = to_matrix(b, Q);
                CHECK((B.transpose() * J + J * B).is_zero());
            }
            std::size_t expect = kind == GroupKind::Sp ? n * (n + 1) / 2 : n * (n - 1) / 2;
            CHECK(s.lie_dim == expect);
        }
}

TEST_CASE("lie constraints cut out the Lie algebra") {
    const Field f = Field::prime(13);
    CHECK(lie_constraints(group_spec(GroupKind::GL, 3), 2, f).empty());
    CHECK(span_dim(f, lie_constraints(group_spec(GroupKind::SO, 2), 1, f), 4, 1) == 3);
    CHECK(span_dim(f, lie_constraints(group_spec(GroupKind::Sp, 2), 1, f), 4, 1) == 1);
    for (auto kind : {GroupKind::GL, GroupKind::O, GroupKind::SO, GroupKind::Sp})
        for (unsigned n = 2; n <= 4; ++n) {
            if (kind == GroupKind::Sp && n % 2) continue;
            GroupSpec s = group_spec(kind, n);
            auto c = lie_constraints(s, 1, f);
            std::size_t dim = c.empty() ? 0 : span_dim(f, c, n * n, 1);
            CHECK(s.lie_dim + dim == n * n);
            CHECK(span_dim(f, lie_constraints(s, 2, f).empty() ? std::vector<SparsePoly>{SparsePoly(f, 2 * n * n)} : lie_constraints(s, 2, f), 2 * n * n, 1) ==
                  2 * dim);
        }
}

TEST_CASE("generic matrices") {
    const Field f7 = Field::prime(7), f13 = Field::prime(13);
    GroupSpec gl2 = group_spec(GroupKind::GL, 2), so2 = group_spec(GroupKind::SO, 2);
    CHECK(generic_matrices(gl2, 1, Realization::Ambient, f7).nvars == 4);
    CHECK(generic_matrices(gl2, 2, Realization::Ambient, f7).nvars == 8);
    for (Field f : {f7, f13}) {
        auto g = generic_matrices(so2, 1, Realization::Intrinsic, f);
        REQUIRE(g.nvars == 1);
        auto a = SparsePoly::variable(f, 1, 0);
        CHECK(g.mats[0][0][0].is_zero());
        CHECK(g.mats[0][1][1].is_zero());
        CHECK(g.mats[0][0][1] == a);
        CHECK(g.mats[0][1][0] == -a);
    }
}

TEST_CASE("commutator generators") {
    const std::uint32_t p = 1000003;
    const Field f = Field::prime(p);
    GroupSpec gl2 = group_spec(GroupKind::GL, 2);
    CHECK(commutator_generators(generic_matrices(gl2, 1, Realization::Ambient, f)).empty());
    auto e2 = commutator_generators(generic_matrices(gl2, 2, Realization::Ambient, f));
    auto e3 = commutator_generators(generic_matrices(gl2, 3, Realization::Ambient, f));
    CHECK(e2.size() == 4);
    CHECK(e3.size() == 12);
    CHECK(span_dim(f, e2, 8, 2) == commutator_rank_by_evaluation(2, 2, p, 40));
    CHECK(span_dim(f, e3, 12, 2) == commutator_rank_by_evaluation(2, 3, p, 80));
    CHECK(span_dim(f, e2, 8, 2) == 3);
    CHECK(span_dim(f, e3, 12, 2) == 9);

    // the trace of every commutator vanishes
    for (unsigned n : {2u, 3u}) {
        auto e = commutator_generators(generic_matrices(group_spec(GroupKind::GL, n), 2, Realization::Ambient, f));
        SparsePoly tr(f, 2 * n * n);
        for (unsigned i = 0; i < n; ++i) tr += e[i * n + i];
        CHECK(tr.is_zero());
    }
}

TEST_CASE("commuting ideal slices") {
    const Field f = Field::prime(7);
    GroupSpec gl2 = group_spec(GroupKind::GL, 2);
    CHECK(ibar_component(gl2, 2, 1, f).dim() == 0);
    CHECK(ibar_component(gl2, 2, 2, f).dim() == 3);
    CHECK(ibar_component(gl2, 1, 3, f).dim() == 0);
    CHECK(commuting_hilbert(gl2, 2, 0, f) == 1);
    CHECK(commuting_hilbert(gl2, 2, 1, f) == 8);
    CHECK(commuting_hilbert(gl2, 2, 2, f) == 33);

    for (auto spec : {gl2, group_spec(GroupKind::SO, 3), group_spec(GroupKind::Sp, 2)}) {
        Field wf = working_field(spec, 7);
        LieFrame frame = lie_frame(spec, wf);
        const std::size_t nv = 2 * frame.size();
        for (unsigned m = 1; m < 4; ++m) {
            LinSpace Im = ibar_component(frame, 2, m), In = ibar_component(frame, 2, m + 1);
            CHECK(In.ambient_dim() == binomial(nv + m, m + 1));
            for (const auto& v : Im.vectors()) {
                SparsePoly q = SparsePoly::from_vector(wf, *Im.labels(), v);
                for (std::size_t i = 0; i < nv; ++i) CHECK(In.contains((q * SparsePoly::variable(wf, nv, i)).to_vector(*In.labels())));
            }
        }
    }
}

TEST_CASE("frames and torus weights") {
    for (auto kind : {GroupKind::GL, GroupKind::SO, GroupKind::O, GroupKind::Sp})
        for (unsigned n = 2; n <= 5; ++n) {
            if (kind == GroupKind::Sp && n % 2) continue;
            GroupSpec s = group_spec(kind, n);
            for (std::uint32_t p : {7u, 13u}) {
                Field f = working_field(s, p);
                auto i = FieldElement(f, -1).sqrt();
                FieldElement scale = s.is_orthogonal() ? *i : FieldElement(f, 1);
                auto H = cartan_elements(s, f);
                for (const LieFrame& frame : {lie_frame(s, f), ambient_frame(s, f)}) {
                    REQUIRE(frame.has_weights());
                    for (std::size_t l = 0; l < frame.size(); ++l) {
                        const Matrix& B = frame[l];
                        auto c = frame.coordinates(B);
                        for (std::size_t j = 0; j < c.size(); ++j) CHECK(c[j] == FieldElement(f, j == l ? 1 : 0));
                        for (std::size_t k = 0; k < H.size(); ++k) {
                            Matrix ad = H[k] * B - B * H[k];
                            CHECK(ad == B.scaled(scale * FieldElement(f, frame.weights()[l][k])));
                        }
                    }
                }
                // the Lie frame spans g
                LieFrame lf = lie_frame(s, f);
                CHECK(lf.size() == s.lie_dim);
                for (const auto& b : s.lie_basis) CHECK(lf.contains(to_matrix(b, f)));
            }
        }
    // so over a field without sqrt(-1) has no weight frame
    CHECK_FALSE(lie_frame(group_spec(GroupKind::SO, 3), Field::prime(7)).has_weights());
    CHECK_THROWS_AS(weight_basis(group_spec(GroupKind::SO, 3), Field::prime(7)), UnsupportedField);
}

TEST_CASE("the commuting ideal is stable under the group") {
    // conjugate the generic matrices by sampled group elements; every
    // commutator entry must land in span(E) + I' in degree 2
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> c(1, 12);
    for (auto spec : {group_spec(GroupKind::GL, 2), group_spec(GroupKind::Sp, 4), group_spec(GroupKind::SO, 3), group_spec(GroupKind::SO, 4)}) {
        const Field f = Field::prime(13);
        const unsigned n = spec.n, d = 2;
        LieFrame g = lie_frame(spec, f);
        Matrix x = Matrix::identity(f, n);
        for (int step = 0; step < 4; ++step)
            for (std::size_t l = 0; l < g.size(); ++l) {
                bool root = false;
                for (int w : g.weights()[l]) root = root || w != 0;
                if (root) x = x * root_element(g[l], FieldElement(f, c(rng)));
            }
        if (spec.kind == GroupKind::GL) x = x * Matrix::from_ints(f, {{3, 0}, {0, 5}});
        Matrix xinv = inverse(x);
        GenericMatrices X = generic_matrices(standard_frame(n, f), d);
        // images of the ambient variables: entries of x X(k) x^-1
        std::vector<SparsePoly> images;
        for (unsigned k = 0; k < d; ++k)
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    SparsePoly e(f, X.nvars);
                    for (unsigned a = 0; a < n; ++a)
                        for (unsigned b = 0; b < n; ++b) e += X.mats[k][a][b].scaled(x(i, a) * xinv(b, j));
                    images.push_back(e);
                }
        auto E = commutator_generators(X);
        auto Ip = lie_constraints(spec, d, f);
        std::vector<SparsePoly> gens = E;
        gens.insert(gens.end(), Ip.begin(), Ip.end());
        LinSpace slice = ideal_degree_component(f, gens, 2, X.nvars);
        for (const auto& e : E) CHECK(slice.contains(substitute(e, images).to_vector(*slice.labels())));
    }
}

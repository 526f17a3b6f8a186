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

#include "chev/chevalley.hpp"

#include <stdexcept>

namespace chev {

namespace {

std::vector<SparsePoly> cartan_assignment(const LieFrame& frame, const std::vector<Matrix>& H, unsigned d) {
    const Field f = frame.field();
    const std::size_t r = H.size(), s = frame.size(), tv = d * r;
    std::vector<Vector> coords;
    for (const auto& h : H) coords.push_back(frame.coordinates(h));
    std::vector<SparsePoly> assign;
    for (unsigned q = 0; q < d; ++q)
        for (std::size_t l = 0; l < s; ++l) {
            SparsePoly a(f, tv);
            for (std::size_t i = 0; i < r; ++i)
                if (!coords[i][l].is_zero()) a.add_term(Monomial::variable(tv, q * r + i), coords[i][l]);
            assign.push_back(std::move(a));
        }
    return assign;
}

// Linear change of coordinates on the frame induced by X -> g X g^-1, copy by copy.
std::vector<SparsePoly> conjugation_assignment(const LieFrame& frame, unsigned d, const Matrix& g) {
    Matrix L = conjugation_matrix(frame, g, inverse(g));
    const std::size_t s = frame.size(), nv = d * s;
    std::vector<SparsePoly> assign;
    for (unsigned q = 0; q < d; ++q)
        for (std::size_t j = 0; j < s; ++j) {
            SparsePoly a(frame.field(), nv);
            for (std::size_t l = 0; l < s; ++l)
                if (!L(l, j).is_zero()) a.add_term(Monomial::variable(nv, q * s + l), L(l, j));
            assign.push_back(std::move(a));
        }
    return assign;
}

struct Restrictor {
    std::vector<SparsePoly> assign;
    std::shared_ptr<const MonomialBasis> target;
    Vector operator()(const MonomialBasis& src, const Vector& v) const {
        const Field f = assign.front().field();
        return substitute(SparsePoly::from_vector(f, src, v), assign).to_vector(*target);
    }
};

Restrictor restrictor(const GroupSpec& spec, unsigned d, unsigned m, Field f) {
    return {cartan_assignment(lie_frame(spec, f), cartan_elements(spec, f), d), MonomialBasis::slice(std::size_t(d) * spec.rank(), m)};
}

}  // namespace

SparsePoly restrict_to_cartan(const SparsePoly& p, const GroupSpec& spec, unsigned d, Field f) {
    return substitute(p, cartan_assignment(lie_frame(spec, f), cartan_elements(spec, f), d));
}

bool DegreeReport::consistent() const {
    return dim_image <= std::min(dim_source, dim_target) && injective == (dim_image == dim_source) &&
           surjective == (dim_image == dim_target);
}

DegreeReport phi_degree_check(const GroupSpec& spec, unsigned d, std::uint32_t p, unsigned m) {
    return phi_degree_check(spec, d, working_field(spec, p), m);
}

DegreeReport phi_degree_check(const GroupSpec& spec, unsigned d, Field f, unsigned m) {
    const std::uint32_t p = f.characteristic();
    LinSpace source = group_invariants(spec, d, m, f, SliceKind::Quotient);
    WeylAction W = weyl_generators(spec);
    LinSpace target = finite_invariants(W, d, m, f);
    Restrictor res = restrictor(spec, d, m, f);
    std::vector<Vector> images;
    bool inside = true;
    for (const auto& v : source.vectors()) {
        Vector img = res(*source.labels(), v);
        if (!target.contains(img)) inside = false;
        images.push_back(std::move(img));
    }
    const std::size_t im = LinSpace::span(f, target.ambient_dim(), images).dim();
    DegreeReport r{spec.kind, spec.n, d, p, m, source.dim(), target.dim(), im, im == source.dim(), im == target.dim(), inside,
                   p != 0 && W.order % p == 0, f.name()};
    return r;
}

AmbientReport phi_from_ambient(const GroupSpec& spec, unsigned d, std::uint32_t p, unsigned m) {
    const Field f = working_field(spec, p);
    LinSpace amb = group_invariants(spec, d, m, f, SliceKind::Ambient);
    LinSpace comm = group_invariants(spec, d, m, f, SliceKind::Quotient);
    LieFrame af = ambient_frame(spec, f), lf = lie_frame(spec, f);
    // ambient coordinate j of X = sum_l c_l B_l
    const std::size_t nv = d * lf.size();
    std::vector<SparsePoly> assign;
    for (unsigned q = 0; q < d; ++q)
        for (std::size_t j = 0; j < af.size(); ++j) assign.emplace_back(f, nv);
    for (std::size_t l = 0; l < lf.size(); ++l) {
        Vector c = af.coordinates(lf[l]);
        for (unsigned q = 0; q < d; ++q)
            for (std::size_t j = 0; j < af.size(); ++j)
                if (!c[j].is_zero()) assign[q * af.size() + j].add_term(Monomial::variable(nv, q * lf.size() + l), c[j]);
    }
    LinSpace U = ibar_component(lf, d, m);
    auto basis = MonomialBasis::slice(nv, m);
    std::vector<Vector> images;
    for (const auto& v : amb.vectors())
        images.push_back(U.reduce(substitute(SparsePoly::from_vector(f, *amb.labels(), v), assign).to_vector(*basis)));
    return {amb.dim(), LinSpace::span(f, basis->size(), images).dim(), comm.dim()};
}

SplitReport so_even_split_check(unsigned n, unsigned d, std::uint32_t p, unsigned m) {
    if (n % 2) throw std::invalid_argument("so_even_split_check needs even n");
    const GroupSpec spec = group_spec(GroupKind::SO, n);
    const Field f = working_field(spec, p);
    LinSpace source = group_invariants(spec, d, m, f, SliceKind::Quotient);
    LieFrame frame = lie_frame(spec, f);
    LinSpace U = ibar_component(frame, d, m);
    Matrix g0 = Matrix::identity(f, n);
    g0(0, 0) = FieldElement(f, -1);
    auto g0_assign = conjugation_assignment(frame, d, g0);
    auto basis = source.labels();
    auto on_source = [&](const Vector& v) {
        return U.reduce(substitute(SparsePoly::from_vector(f, *basis, v), g0_assign).to_vector(*basis));
    };
    EigenSplit src = eigen_split(source, on_source);

    WeylAction W = weyl_generators(spec);
    LinSpace target = finite_invariants(W, d, m, f);
    Matrix w0 = weyl_slice_action(component_reflection(spec), d, m, f);
    EigenSplit tgt = eigen_split(target, [&](const Vector& v) { return w0.apply_right(v); });

    Restrictor res = restrictor(spec, d, m, f);
    bool ok = true;
    auto image_dim = [&](const LinSpace& part, const LinSpace& into) {
        std::vector<Vector> imgs;
        for (const auto& v : part.vectors()) {
            Vector img = res(*basis, v);
            if (!into.contains(img)) ok = false;
            imgs.push_back(std::move(img));
        }
        return LinSpace::span(f, target.ambient_dim(), imgs).dim();
    };
    const std::size_t ip = image_dim(src.plus, tgt.plus);
    const std::size_t imn = image_dim(src.minus, tgt.minus);
    return {n, d, p, m, src.plus.dim(), src.minus.dim(), tgt.plus.dim(), tgt.minus.dim(), ip, imn, ok};
}

}  // namespace chev

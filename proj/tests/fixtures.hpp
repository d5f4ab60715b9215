#pragma once

// Small algebras and modules shared by the unit tests.

#include "relhom/tilt/tilting.hpp"

#include <map>
#include <string>

namespace relhom::testing {

template <ExactField F>
Relation<F> monomial(const F& field, std::size_t start, std::vector<std::size_t> arrows) {
    return {RelationTerm<F>{field.one(), Path{start, std::move(arrows)}}};
}

/// 1 -a-> 2 -b-> 3 -c-> 1 with every path of length 3 zero.
template <ExactField F = RationalField>
AlgebraPtr<F> cyclic3(F field = {}) {
    Quiver q(3, {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 2, 0}});
    std::vector<Relation<F>> rels{monomial(field, 0, {0, 1, 2}), monomial(field, 1, {1, 2, 0}),
                                  monomial(field, 2, {2, 0, 1})};
    return PathAlgebra<F>::build(field, q, rels, 3);
}

/// Same quiver, relations alpha beta gamma = beta gamma alpha beta = gamma alpha beta gamma = 0.
template <ExactField F = RationalField>
AlgebraPtr<F> cyclic3_mixed(F field = {}) {
    Quiver q(3, {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 2, 0}});
    std::vector<Relation<F>> rels{monomial(field, 0, {0, 1, 2}), monomial(field, 1, {1, 2, 0, 1}),
                                  monomial(field, 2, {2, 0, 1, 2})};
    return PathAlgebra<F>::build(field, q, rels, 4);
}

/// 1 -a-> 2, no relations.
template <ExactField F = RationalField>
AlgebraPtr<F> a2(F field = {}) {
    return PathAlgebra<F>::build(field, Quiver(2, {{"a", 0, 1}}), {}, 2);
}

/// k[x]/(x^2) as a loop with x^2 = 0.
template <ExactField F = RationalField>
AlgebraPtr<F> dual_numbers(F field = {}) {
    return PathAlgebra<F>::build(field, Quiver(1, {{"x", 0, 0}}), {monomial(field, 0, {0, 0})}, 2);
}

/// P_i, M_i = P_i / soc P_i, S_i for the cyclic algebra (0-based names P1..S3).
template <ExactField F>
std::map<std::string, Representation<F>> cyclic3_corpus(const AlgebraPtr<F>& alg) {
    std::map<std::string, Representation<F>> out;
    for (std::size_t i = 0; i < 3; ++i) {
        auto p = projective(alg, i);
        auto idx = std::to_string(i + 1);
        out["P" + idx] = p;
        out["M" + idx] = quotient_by_socle(p);
        out["S" + idx] = simple(alg, i);
    }
    return out;
}

/// The corpus as a list, in the order P1..P3, M1..M3, S1..S3.
template <ExactField F>
std::vector<NamedModule<F>> cyclic3_list(const AlgebraPtr<F>& alg) {
    auto c = cyclic3_corpus(alg);
    std::vector<NamedModule<F>> out;
    for (const char* n : {"P1", "P2", "P3", "M1", "M2", "M3", "S1", "S2", "S3"}) out.push_back({n, c.at(n)});
    return out;
}

/// F with P(F) = add(P1 + P2 + P3 + S2 + S3 + M2) over the cyclic algebra.
template <ExactField F>
SubbifunctorF<F> cyclic3_structure(const AlgebraPtr<F>& alg) {
    auto c = cyclic3_corpus(alg);
    std::vector<Summand<F>> s;
    for (const char* n : {"P1", "P2", "P3", "S2", "S3", "M2"}) s.push_back({n, c.at(n), 1});
    return SubbifunctorF<F>(alg, std::move(s));
}

/// Generic corpus: projectives, injectives, simples and P_i / soc P_i.
template <ExactField F>
std::vector<NamedModule<F>> basic_corpus(const AlgebraPtr<F>& alg) {
    std::vector<NamedModule<F>> out;
    auto add = [&](std::string name, const Representation<F>& m) {
        if (m.is_zero()) return;
        for (const auto& e : out)
            if (is_isomorphic(e.module, m)) return;
        out.push_back({std::move(name), m});
    };
    for (std::size_t i = 0; i < alg->vertex_count(); ++i) {
        auto idx = std::to_string(i + 1);
        add("P" + idx, projective(alg, i));
        add("I" + idx, injective(alg, i));
        add("S" + idx, simple(alg, i));
        add("M" + idx, quotient_by_socle(projective(alg, i)));
    }
    return out;
}

/// Radical of P1 over the mixed cyclic algebra, F = add(P1 + P2 + P3 + M), and
/// T = (P2 -> M) + (P2 -> P1) + P2[1] + P3[1] with the first two in degrees -1, 0.
template <ExactField F = RationalField>
struct MixedCyclicData {
    AlgebraPtr<F> alg = cyclic3_mixed<F>();
    Representation<F> p1 = projective(alg, 0), p2 = projective(alg, 1), p3 = projective(alg, 2);
    Representation<F> m = radical(p1).module;
    SubbifunctorF<F> f{alg, {{"P1", p1, 1}, {"P2", p2, 1}, {"P3", p3, 1}, {"M", m, 1}}};

    LComplex<F> two_term(const Representation<F>& target) const {
        auto h = hom_space(p2, target);
        return LComplex<F>(alg, -1, {p2, target}, {h.basis.at(0)});
    }
    /// Q -> M + P1 with Q = P2 + P2, the diagonal approximation.
    LComplex<F> t1() const {
        auto to_m = hom_space(p2, m), to_p1 = hom_space(p2, p1);
        auto src = direct_sum(alg, {p2, p2}), tgt = direct_sum(alg, {m, p1});
        auto d = tgt.injections[0] * to_m.basis[0] * src.projections[0] + tgt.injections[1] * to_p1.basis[0] * src.projections[1];
        return LComplex<F>(alg, -1, {src.sum, tgt.sum}, {d}, {{p2, p2}, {m, p1}});
    }
    std::vector<TiltingSummand<F>> parts() const {
        return {{"T1a", two_term(m)}, {"T1b", two_term(p1)}, {"T2a", stalk(p2, -1)}, {"T2b", stalk(p3, -1)}};
    }
    /// T1[-1] -> Q (identity on Q), with cone M + P1 up to homotopy.
    std::vector<WitnessStep<F>> witnesses() const {
        return {{"T1", {{"T1a", -1}, {"T1b", -1}}, {{"T2a", -1}, {"T2a", -1}}, {"M", "P1"}, std::nullopt}};
    }
};

}  // namespace relhom::testing

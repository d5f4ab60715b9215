#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace relhom {
namespace {

using testing::cyclic3;
using testing::cyclic3_corpus;
using Q = RationalField;
using Dims = std::vector<std::size_t>;

TEST(PathAlgebra, SingleVertex) {
    auto alg = PathAlgebra<Q>::build({}, Quiver(1, {}), {}, 2);
    EXPECT_EQ(alg->dimension(), 1u);
}

TEST(PathAlgebra, CyclicHasDimensionNine) {
    auto alg = cyclic3();
    EXPECT_EQ(alg->dimension(), 9u);
    std::size_t by_len[3] = {0, 0, 0};
    for (const auto& p : alg->basis()) ++by_len[p.length()];
    EXPECT_EQ(by_len[0], 3u);
    EXPECT_EQ(by_len[1], 3u);
    EXPECT_EQ(by_len[2], 3u);
}

TEST(PathAlgebra, MixedLengthRelationsGiveFiniteBasis) {
    auto alg = testing::cyclic3_mixed();
    // paths from 1: e, a, ab ; from 2: e, b, bc, bca ; from 3: e, c, ca, cab
    EXPECT_EQ(alg->dimension(), 11u);
    EXPECT_EQ(projective(alg, 0).dims(), (Dims{1, 1, 1}));
    EXPECT_EQ(projective(alg, 1).dims(), (Dims{1, 2, 1}));
    EXPECT_EQ(projective(alg, 2).dims(), (Dims{1, 1, 2}));
}

TEST(PathAlgebra, RejectsBadRelations) {
    RationalField f;
    Quiver q(3, {{"alpha", 0, 1}, {"beta", 1, 2}, {"gamma", 2, 0}});
    EXPECT_THROW(PathAlgebra<Q>::build(f, q, {testing::monomial(f, 0, {0})}, 3), std::invalid_argument);
    Relation<Q> nonparallel{{f.one(), Path{0, {0, 1}}}, {f.one(), Path{1, {1, 2}}}};
    EXPECT_THROW(PathAlgebra<Q>::build(f, q, {nonparallel}, 3), std::invalid_argument);
    EXPECT_THROW(PathAlgebra<Q>::build(f, q, {}, 1), std::invalid_argument);
    EXPECT_THROW(Quiver(2, {{"a", 0, 2}}), std::invalid_argument);
    EXPECT_THROW(Quiver(2, {{"a", 0, 1}, {"a", 1, 0}}), std::invalid_argument);
}

TEST(PathAlgebra, MultiplicationIsAssociative) {
    auto alg = testing::cyclic3_mixed();
    auto mult = [&](const SparseVec<Q>& x, std::size_t y) {
        SparseVec<Q> out;
        std::map<std::size_t, Rational> acc;
        for (const auto& [b, c] : x)
            for (const auto& [b2, c2] : alg->multiply(b, y)) acc[b2] = acc[b2] + c * c2;
        for (auto& [b, c] : acc)
            if (!c.is_zero()) out.emplace_back(b, c);
        return out;
    };
    for (std::size_t x = 0; x < alg->dimension(); ++x)
        for (std::size_t y = 0; y < alg->dimension(); ++y)
            for (std::size_t z = 0; z < alg->dimension(); ++z) {
                auto left = mult(alg->multiply(x, y), z);
                std::map<std::size_t, Rational> acc;
                for (const auto& [b, c] : alg->multiply(y, z))
                    for (const auto& [b2, c2] : alg->multiply(x, b)) acc[b2] = acc[b2] + c * c2;
                SparseVec<Q> right;
                for (auto& [b, c] : acc)
                    if (!c.is_zero()) right.emplace_back(b, c);
                EXPECT_EQ(left, right);
            }
}

TEST(Representation, RejectsRelationViolation) {
    auto alg = cyclic3();
    RationalField f;
    auto one = Matrix<Q>::from_ints(f, 1, 1, {1});
    EXPECT_THROW(Representation<Q>(alg, {1, 1, 1}, {one, one, one}), std::invalid_argument);
    EXPECT_THROW(Representation<Q>(alg, {1, 1}, {one, one, one}), std::invalid_argument);
    EXPECT_NO_THROW(Representation<Q>(alg, {1, 1, 1}, {one, one, Matrix<Q>(f, 1, 1)}));
}

TEST(Modules, ProjectivesInjectivesSimples) {
    auto alg = cyclic3();
    EXPECT_EQ(projective(alg, 0).dims(), (Dims{1, 1, 1}));
    auto s2 = simple(alg, 1);
    EXPECT_EQ(s2.dims(), (Dims{0, 1, 0}));
    for (const auto& m : s2.arrow_maps()) EXPECT_TRUE(m.is_zero());
    EXPECT_TRUE(is_isomorphic(injective(alg, 0), projective(alg, 1)));
    EXPECT_THROW(projective(alg, 3), std::out_of_range);
}

TEST(Modules, ConstructedModulesSatisfyRelations) {
    for (auto alg : {cyclic3(), testing::cyclic3_mixed(), testing::a2(), testing::dual_numbers()})
        for (std::size_t i = 0; i < alg->vertex_count(); ++i)
            for (const auto& m : {projective(alg, i), injective(alg, i), simple(alg, i)})
                EXPECT_NO_THROW(Representation<Q>(alg, m.dims(), m.arrow_maps()));
}

TEST(Hom, YonedaDimension) {
    for (auto alg : {cyclic3(), testing::cyclic3_mixed(), testing::a2(), testing::dual_numbers()}) {
        std::vector<Representation<Q>> corpus;
        for (std::size_t i = 0; i < alg->vertex_count(); ++i) {
            corpus.push_back(projective(alg, i));
            corpus.push_back(injective(alg, i));
            corpus.push_back(simple(alg, i));
            corpus.push_back(quotient_by_socle(projective(alg, i)));
        }
        for (std::size_t i = 0; i < alg->vertex_count(); ++i)
            for (const auto& x : corpus) EXPECT_EQ(hom_space(projective(alg, i), x).dim(), x.dim(i));
    }
}

TEST(Hom, SmallCases) {
    auto alg = cyclic3();
    EXPECT_EQ(hom_space(simple(alg, 0), simple(alg, 1)).dim(), 0u);
    EXPECT_EQ(hom_space(projective(alg, 0), projective(alg, 0)).dim(), 1u);
    for (const auto& b : hom_space(projective(alg, 0), projective(alg, 2)).basis) EXPECT_TRUE(b.is_homomorphism());
}

TEST(Hom, AdditiveInTarget) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    for (const auto& [na, a] : c)
        for (const auto& [nm, m] : c) {
            auto s = direct_sum(alg, {m, c.at("S2")}).sum;
            EXPECT_EQ(hom_space(a, s).dim(), hom_space(a, m).dim() + hom_space(a, c.at("S2")).dim()) << na << nm;
        }
}

TEST(Hom, CoordinatesRoundTrip) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    auto h = hom_space(c.at("P1"), c.at("M1"));
    std::vector<Rational> coeffs;
    for (std::size_t k = 0; k < h.dim(); ++k) coeffs.emplace_back(static_cast<long>(k) + 2);
    EXPECT_EQ(h.coordinates(h.combine(coeffs)), coeffs);
}

TEST(Modules, KernelCokernelImage) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    auto p1 = c.at("P1");
    EXPECT_TRUE(kernel(ModuleMap<Q>::identity(p1)).module.is_zero());
    auto zero = Representation<Q>::zero(alg);
    EXPECT_EQ(cokernel(ModuleMap<Q>::zero(zero, p1)).module, p1);
    auto cover = projective_cover(c.at("S1"));
    auto ker = kernel(cover.map);
    EXPECT_EQ(ker.module.dims(), (Dims{0, 1, 1}));
    auto im = image(cover.map);
    for (std::size_t v = 0; v < 3; ++v) EXPECT_EQ(p1.dim(v), ker.module.dim(v) + im.module.dim(v));
    EXPECT_TRUE((ShortExactSeq<Q>{ker.inclusion, cover.map}.is_exact()));
    EXPECT_TRUE(ker.inclusion.is_homomorphism());
}

TEST(Modules, DirectSums) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    auto zero = Representation<Q>::zero(alg);
    EXPECT_EQ(direct_sum(alg, {c.at("M1"), zero}).sum, c.at("M1"));
    EXPECT_EQ(direct_sum(alg, {c.at("P1"), c.at("S2")}).sum.dims(), (Dims{1, 2, 1}));
    auto ds = direct_sum(alg, {c.at("P1"), c.at("S2")});
    EXPECT_TRUE((ShortExactSeq<Q>{ds.injections[0], ds.projections[1]}.is_exact()));
}

TEST(Modules, RadicalTopSocle) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    EXPECT_TRUE(radical(c.at("S2")).module.is_zero());
    EXPECT_TRUE(is_isomorphic(top(c.at("P1")).module, c.at("S1")));
    EXPECT_TRUE(is_isomorphic(socle(c.at("P1")).module, c.at("S3")));
    auto rad = radical(c.at("P1")).module;
    EXPECT_EQ(rad.dims(), (Dims{0, 1, 1}));
    EXPECT_TRUE(is_isomorphic(rad, c.at("M2")));
    EXPECT_EQ(c.at("M1").dims(), (Dims{1, 1, 0}));
}

TEST(Modules, ProjectiveCovers) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    for (const auto& [name, m] : c) {
        auto cov = projective_cover(m);
        EXPECT_TRUE(cov.map.is_surjective()) << name;
        EXPECT_TRUE(cov.map.is_homomorphism()) << name;
        EXPECT_TRUE(kernel_in_radical(cov.map)) << name;
    }
    auto cov = projective_cover(c.at("P2"));
    EXPECT_EQ(cov.vertices, (Dims{1}));
    EXPECT_TRUE(cov.map.is_isomorphism());
    EXPECT_TRUE(projective_cover(Representation<Q>::zero(alg)).map.source().is_zero());
}

TEST(Modules, MinimalPresentationOfS2) {
    auto alg = cyclic3();
    auto pres = minimal_presentation(simple(alg, 1));
    EXPECT_EQ(pres.p0.vertices, (Dims{1}));
    EXPECT_EQ(pres.p1.vertices, (Dims{2}));
    EXPECT_TRUE(pres.d.is_homomorphism());
    EXPECT_TRUE((pres.p0.map * pres.d).is_zero());
}

TEST(Duality, DualIsInvolutive) {
    for (auto alg : {cyclic3(), testing::cyclic3_mixed(), testing::a2()}) {
        auto opp = alg->opposite();
        for (std::size_t i = 0; i < alg->vertex_count(); ++i)
            for (const auto& m : {projective(alg, i), quotient_by_socle(projective(alg, i)), simple(alg, i)}) {
                auto dd = dual(dual(m, opp), alg);
                EXPECT_TRUE(is_isomorphic(dd, m));
            }
    }
}

TEST(Duality, InjectiveIsDualOfOppositeProjective) {
    for (auto alg : {cyclic3(), testing::cyclic3_mixed(), testing::a2()}) {
        auto opp = alg->opposite();
        for (std::size_t i = 0; i < alg->vertex_count(); ++i)
            EXPECT_TRUE(is_isomorphic(dual(projective(opp, i), alg), injective(alg, i)));
    }
}

TEST(Translate, ProjectivesVanish) {
    auto alg = cyclic3();
    for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(dtr(projective(alg, i)).is_zero());
}

TEST(Translate, CyclicExample) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    EXPECT_TRUE(is_isomorphic(dtr(c.at("S2")), c.at("S3")));
    EXPECT_TRUE(is_isomorphic(dtr(c.at("S3")), c.at("S1")));
    EXPECT_TRUE(is_isomorphic(dtr(c.at("M2")), c.at("M3")));
    auto s1p1 = direct_sum(alg, {c.at("S1"), c.at("P1")}).sum;
    EXPECT_TRUE(is_isomorphic(dtr(s1p1), dtr(c.at("S1"))));
}

TEST(Translate, A2SimpleProjectiveInjective) {
    // 1 -> 2: S2 = P2 is projective, tau(S1) = S2.
    auto alg = testing::a2();
    EXPECT_TRUE(is_isomorphic(dtr(simple(alg, 0)), simple(alg, 1)));
}

TEST(Translate, TransposeIsAdditive) {
    auto alg = cyclic3();
    auto opp = alg->opposite();
    auto c = cyclic3_corpus(alg);
    for (const auto& a : {"S1", "S2", "M1", "M3"})
        for (const auto& b : {"S3", "M2", "P1"}) {
            auto sum = direct_sum(alg, {c.at(a), c.at(b)}).sum;
            auto lhs = transpose(sum, opp);
            auto rhs = direct_sum(opp, {transpose(c.at(a), opp), transpose(c.at(b), opp)}).sum;
            EXPECT_TRUE(is_isomorphic(lhs, rhs)) << a << "+" << b;
        }
}

TEST(Iso, Basics) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    auto r = is_isomorphic(c.at("M1"), c.at("M1"));
    ASSERT_TRUE(r);
    EXPECT_TRUE(r.witness->is_isomorphism());
    EXPECT_EQ(is_isomorphic(c.at("S1"), c.at("M1")).verdict, Verdict::no);
    EXPECT_EQ(is_isomorphic(c.at("S1"), c.at("S2")).verdict, Verdict::no);
}

TEST(Iso, NeedsCombinationOfBasisElements) {
    // Hom(S1+S1, S1+S1) has no invertible basis element in the elementary basis.
    auto alg = cyclic3();
    auto s = direct_sum(alg, {simple(alg, 0), simple(alg, 0)}).sum;
    EXPECT_TRUE(is_isomorphic(s, s));
}

TEST(Iso, SmallPrimeFieldCanBeUnknown) {
    PrimeField f2(2);
    auto alg = PathAlgebra<PrimeField>::build(f2, Quiver(1, {}), {}, 2);
    auto s = simple(alg, 0);
    auto four = direct_sum(alg, {s, s, s, s}).sum;
    auto r = is_isomorphic(four, four);
    EXPECT_NE(r.verdict, Verdict::no);
}

TEST(Indecomposable, CorpusIsLocal) {
    auto alg = cyclic3();
    for (const auto& [name, m] : cyclic3_corpus(alg)) EXPECT_TRUE(check_indecomposable(m).consistent) << name;
    auto s = direct_sum(alg, {simple(alg, 0), simple(alg, 1)}).sum;
    auto chk = check_indecomposable(s);
    EXPECT_FALSE(chk.consistent);
    ASSERT_TRUE(chk.witness.has_value());
}

TEST(Modules, PrimeFieldAgreesWithRationals) {
    PrimeField f5(5);
    auto alg = cyclic3(f5);
    auto c = cyclic3_corpus(alg);
    auto cq = cyclic3_corpus(cyclic3());
    for (const auto& [a, m] : c)
        for (const auto& [b, n] : c) EXPECT_EQ(hom_space(m, n).dim(), hom_space(cq.at(a), cq.at(b)).dim());
    EXPECT_TRUE(is_isomorphic(dtr(c.at("M2")), c.at("M3")));
}

}  // namespace
}  // namespace relhom

#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace relhom {
namespace {

using namespace relhom::testing;
using Q = RationalField;
using Cx = LComplex<Q>;

std::vector<TiltingSummand<Q>> stalk_parts(const SubbifunctorF<Q>& f) {
    std::vector<TiltingSummand<Q>> out;
    for (const auto& s : f.summands()) out.push_back({s.name, stalk(s.module)});
    return out;
}

struct StalkG : ::testing::Test {
    AlgebraPtr<Q> alg = cyclic3();
    SubbifunctorF<Q> f = cyclic3_structure(alg);
};

TEST_F(StalkG, IsTilting) {
    auto r = verify_f_tilting(stalk_parts(f), f);
    EXPECT_TRUE(r.passed()) << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_TRUE(r.orthogonal);
    EXPECT_EQ(r.term_length, 0u);
    EXPECT_EQ(r.declared_count, 6u);
    EXPECT_EQ(r.generation, "count-criterion passed");
    EXPECT_EQ(r.generated.size(), 6u);
    for (const auto& [i, d] : r.self_orthogonal) EXPECT_EQ(d, 0u) << i;
}

TEST_F(StalkG, EndAlgebraDimension) {
    auto e = end_algebra(alg, stalk_parts(f));
    std::size_t expected = 0;
    for (const auto& a : f.summands())
        for (const auto& b : f.summands()) expected += hom_space(a.module, b.module).dim();
    EXPECT_EQ(e.dim(), expected);
    EXPECT_EQ(e.algebra->radical().cols(), e.dim() - 6);
    auto top = top_report(e.algebra);
    EXPECT_EQ(top.top_dim, 6u);
    EXPECT_EQ(top.status, SplitStatus::split);
}

TEST_F(StalkG, StalkP1IsOneDimensional) {
    auto e = end_algebra(alg, {{"P1", stalk(projective(alg, 0))}});
    EXPECT_EQ(e.dim(), 1u);
    EXPECT_EQ(e.algebra->radical().cols(), 0u);
}

TEST_F(StalkG, ContractibleSummandDoesNotChangeEnd) {
    auto parts = stalk_parts(f);
    auto base = end_algebra(alg, parts).dim();
    auto p = projective(alg, 1);
    auto c = cone(LChainMap<Q>::identity(stalk(p))).complex;
    parts.push_back({"C", c});
    EXPECT_EQ(end_algebra(alg, parts).dim(), base);
}

TEST(EndAlgebra, CompositionRespectsHomotopy) {
    MixedCyclicData<Q> s6;
    auto parts = s6.parts();
    auto t = sum_of(s6.alg, parts);
    auto h = hom_k(t, t, 0);
    ASSERT_GT(h.null_flat.cols(), 0u);
    CoefficientSampler<Q> sampler(Q{}, 17);
    for (int trial = 0; trial < 20; ++trial) {
        auto coeffs = sampler.vector(h.homotopy_basis.size());
        // a random null-homotopic map d s + s d
        std::vector<ModuleMap<Q>> s;
        for (int i = t.lo(); i <= t.hi(); ++i) s.push_back(ModuleMap<Q>::zero(t.at(i), t.at(i - 1)));
        for (std::size_t c = 0; c < coeffs.size(); ++c)
            for (std::size_t k = 0; k < s.size(); ++k) s[k] = s[k] + coeffs[c] * h.homotopy_basis[c][k];
        std::vector<ModuleMap<Q>> comps;
        for (int i = t.lo(); i <= t.hi(); ++i) {
            auto k = static_cast<std::size_t>(i - t.lo());
            auto up = i < t.hi() ? s[k + 1] * t.d(i) : ModuleMap<Q>::zero(t.at(i), t.at(i));
            comps.push_back(t.d(i - 1) * s[k] + up);
        }
        LChainMap<Q> null(t, t, comps);
        for (const auto& b : h.basis) {
            EXPECT_TRUE(h.is_null_homotopic(null * b));
            EXPECT_TRUE(h.is_null_homotopic(b * null));
        }
    }
}

TEST_F(StalkG, SigmaImageIsRegularModule) {
    auto g = direct_sum(alg, [&] {
        std::vector<Representation<Q>> v;
        for (const auto& s : f.summands()) v.push_back(s.module);
        return v;
    }());
    std::vector<Representation<Q>> blocks;
    for (const auto& s : f.summands()) blocks.push_back(s.module);
    auto img = image_tilting_over_sigma(Cx::stalk(g.sum, 0, blocks), f);
    ASSERT_EQ(img.complex.support(), (std::optional<std::pair<int, int>>{{0, 0}}));
    EXPECT_EQ(img.complex.at(0).dim(), img.sigma.dim());
    EXPECT_TRUE(img.matches);
}

TEST(MixedCyclicTilting, SelfOrthogonalCountAndWitness) {
    MixedCyclicData<Q> s6;
    auto r = verify_f_tilting(s6.parts(), s6.f, s6.witnesses());
    for (const auto& msg : r.failures) ADD_FAILURE() << msg;
    EXPECT_TRUE(r.orthogonal);
    EXPECT_EQ(r.self_orthogonal.size(), 6u);
    EXPECT_TRUE(r.count_ok);
    EXPECT_EQ(r.declared_count, 4u);
    EXPECT_EQ(r.term_length, 1u);
    EXPECT_EQ(r.generation, "witnessed");
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_TRUE(r.witnesses[0].valid);
    for (const auto& [name, status] : r.summand_local) EXPECT_EQ(status, "local") << name;
}

TEST(MixedCyclicTilting, WithoutWitnessOnlyCount) {
    MixedCyclicData<Q> s6;
    auto r = verify_f_tilting(s6.parts(), s6.f);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.generation, "count-criterion passed");
    // the stalks P2[1], P3[1] already give two summands of G
    EXPECT_EQ(r.generated, (std::set<std::string>{"P2", "P3"}));
}

TEST(MixedCyclicTilting, BadWitnessIsReported) {
    MixedCyclicData<Q> s6;
    std::vector<WitnessStep<Q>> w{{"bogus", {{"T2b", -1}}, {{"T2a", -1}}, {"M"}, std::nullopt},
                                  {"missing", {{"nothing", 0}}, {{"T2a", 0}}, {}, std::nullopt}};
    auto r = verify_f_tilting(s6.parts(), s6.f, w);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.generation, "count-criterion passed");
    EXPECT_FALSE(r.witnesses[0].valid);
    EXPECT_FALSE(r.witnesses[1].valid);
}

TEST(MixedCyclicTilting, WrongCountFails) {
    MixedCyclicData<Q> s6;
    auto parts = s6.parts();
    parts.pop_back();
    auto r = verify_f_tilting(parts, s6.f);
    EXPECT_FALSE(r.count_ok);
    EXPECT_EQ(r.generation, "not checked");
    EXPECT_FALSE(verify_f_tilting(s6.parts(), s6.f, {}, 5).count_ok);
}

TEST(MixedCyclicTilting, EndAlgebraCounts) {
    MixedCyclicData<Q> s6;
    auto e = end_algebra(s6.alg, s6.parts());
    auto top = top_report(e.algebra);
    EXPECT_EQ(top.top_dim, 4u);
    EXPECT_EQ(top.status, SplitStatus::split);
}

TEST(MixedCyclicTilting, SigmaSideHomsAgree) {
    MixedCyclicData<Q> s6;
    auto t = sum_of(s6.alg, s6.parts());
    auto img = image_tilting_over_sigma(t, s6.f);
    EXPECT_TRUE(img.matches);
    for (const auto& [i, a, b] : img.window) EXPECT_EQ(a, b) << i;
    for (int i = t.lo(); i <= t.hi(); ++i) EXPECT_EQ(img.complex.at(i).dim(), hom_space(s6.f.generator(), t.at(i)).dim());
}

TEST(MixedCyclicTilting, NotSelfOrthogonal) {
    // P1 + P1[1] has a degree 1 self-extension through the identity
    MixedCyclicData<Q> s6;
    std::vector<TiltingSummand<Q>> parts{{"A", stalk(s6.p1, 0)}, {"B", stalk(s6.p1, -1)}};
    auto r = verify_f_tilting(parts, s6.f);
    EXPECT_FALSE(r.orthogonal);
    EXPECT_FALSE(r.passed());
}

}  // namespace
}  // namespace relhom

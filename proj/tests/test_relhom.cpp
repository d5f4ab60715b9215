#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace relhom {
namespace {

using namespace relhom::testing;
using Q = RationalField;
using Dims = std::vector<std::size_t>;

struct Cyclic : ::testing::Test {
    AlgebraPtr<Q> alg = cyclic3();
    std::map<std::string, Representation<Q>> c = cyclic3_corpus(alg);
    std::vector<NamedModule<Q>> corpus = cyclic3_list(alg);
    SubbifunctorF<Q> f = cyclic3_structure(alg);
    SubbifunctorF<Q> ordinary = SubbifunctorF<Q>::ordinary(alg);
};

// Hom(G_j, g) onto for each summand, computed from raw hom spaces and solve().
bool lifts_oracle(const ModuleMap<Q>& g, const SubbifunctorF<Q>& f) {
    for (const auto& s : f.summands()) {
        auto hb = hom_space(s.module, g.source());
        auto hc = hom_space(s.module, g.target());
        for (const auto& t : hc.basis) {
            bool found = false;
            // t must be a combination of g ∘ b
            std::vector<std::vector<Rational>> cols;
            for (const auto& b : hb.basis) cols.push_back((g * b).flatten());
            auto tv = t.flatten();
            auto a = from_columns(Q{}, tv.size(), cols);
            found = solve(a, Matrix<Q>(Q{}, tv.size(), 1, tv)).has_value();
            if (!found) return false;
        }
    }
    return true;
}

TEST_F(Cyclic, RejectsInvalidGenerators) {
    EXPECT_THROW(SubbifunctorF<Q>(alg, {{"P1", c.at("P1"), 1}}), std::invalid_argument);
    EXPECT_THROW(SubbifunctorF<Q>(alg, {{"P1", c.at("P1"), 1},
                                        {"P2", c.at("P2"), 1},
                                        {"P3", c.at("P3"), 1},
                                        {"X", direct_sum(alg, {c.at("S1"), c.at("S2")}).sum, 1}}),
                 std::invalid_argument);
    EXPECT_THROW(SubbifunctorF<Q>(alg, {{"P1", c.at("P1"), 1},
                                        {"P2", c.at("P2"), 1},
                                        {"P3", c.at("P3"), 1},
                                        {"again", c.at("P3"), 1}}),
                 std::invalid_argument);
}

TEST_F(Cyclic, SplitSequencesAreFExact) {
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            auto ds = direct_sum(alg, {a.module, b.module});
            ShortExactSeq<Q> ses{ds.injections[0], ds.projections[1]};
            EXPECT_TRUE(is_f_exact(ses, f));
        }
}

TEST_F(Cyclic, SocleSequenceOfP1IsNotFExact) {
    auto cover = projective_cover(c.at("M1"));
    auto ker = kernel(cover.map);
    EXPECT_TRUE(is_isomorphic(ker.module, c.at("S3")));
    ShortExactSeq<Q> ses{ker.inclusion, cover.map};
    EXPECT_EQ(is_f_exact(ses, f), lifts_oracle(cover.map, f));
    // Hom(S2, M1) is nonzero while Hom(S2, P1) = 0.
    EXPECT_FALSE(is_f_exact(ses, f));
    EXPECT_TRUE(is_f_exact(ses, ordinary));
}

TEST_F(Cyclic, OrdinaryStructureAcceptsExactSequences) {
    for (const auto& x : corpus) {
        auto cover = projective_cover(x.module);
        auto ker = kernel(cover.map);
        EXPECT_TRUE(is_f_exact(ShortExactSeq<Q>{ker.inclusion, cover.map}, ordinary));
        auto r = radical(x.module);
        auto t = top(x.module);
        EXPECT_TRUE(is_f_exact(ShortExactSeq<Q>{r.inclusion, t.projection}, ordinary));
    }
}

TEST_F(Cyclic, ApproximationOfAddGObjectIsIsomorphism) {
    for (const auto& s : f.summands()) {
        auto a = right_approximation(s.module, f);
        EXPECT_TRUE(a.map.is_isomorphism()) << s.name;
    }
    auto zero = Representation<Q>::zero(alg);
    auto a = right_approximation(zero, f);
    EXPECT_TRUE(a.map.source().is_zero());
}

// Smallest subset of the copies G_j^{dim Hom(G_j, X)} that still approximates X.
std::size_t exhaustive_min_source(const Representation<Q>& x, const SubbifunctorF<Q>& f) {
    std::vector<Representation<Q>> mods;
    std::vector<ModuleMap<Q>> maps;
    for (const auto& s : f.summands())
        for (const auto& b : hom_space(s.module, x).basis) {
            mods.push_back(s.module);
            maps.push_back(b);
        }
    std::size_t best = SIZE_MAX;
    for (std::uint32_t mask = 0; mask < (1u << mods.size()); ++mask) {
        std::vector<Representation<Q>> ms;
        std::vector<ModuleMap<Q>> fs;
        std::size_t dim = 0;
        for (std::size_t k = 0; k < mods.size(); ++k)
            if (mask & (1u << k)) {
                ms.push_back(mods[k]);
                fs.push_back(maps[k]);
                dim += mods[k].total_dim();
            }
        if (dim >= best) continue;
        auto ds = direct_sum(x.algebra_ptr(), ms);
        auto g = ms.empty() ? ModuleMap<Q>::zero(ds.sum, x) : map_from_sum(ds, fs, x);
        if (lifts_oracle(g, f)) best = dim;
    }
    return best;
}

TEST_F(Cyclic, ApproximationsAreMinimal) {
    for (const auto& x : corpus) {
        auto a = right_approximation(x.module, f);
        EXPECT_TRUE(is_right_approximation(a, f)) << x.name;
        EXPECT_TRUE(lifts_oracle(a.map, f)) << x.name;
        EXPECT_TRUE(is_right_minimal(a, f)) << x.name;
        EXPECT_EQ(a.sum.sum.total_dim(), exhaustive_min_source(x.module, f)) << x.name;
    }
    auto a = right_approximation(c.at("M1"), f);
    EXPECT_EQ(a.sum.sum.dims(), (Dims{1, 2, 1}));
}

TEST_F(Cyclic, NonMinimalMapFailsCertificate) {
    auto ds = direct_sum(alg, {c.at("P1"), c.at("P1")});
    auto cover = projective_cover(c.at("S1")).map;
    Approximation<Q> a{map_from_sum(ds, {cover, cover}, c.at("S1")), {0, 0}, ds};
    EXPECT_TRUE(is_right_approximation(a, ordinary));
    EXPECT_FALSE(is_right_minimal(a, ordinary));
}

TEST_F(Cyclic, OrdinaryResolutionOfS1IsPeriodic) {
    auto res = f_resolution(c.at("S1"), ordinary, 10);
    EXPECT_TRUE(res.truncated);
    ASSERT_EQ(res.terms.size(), 11u);
    for (std::size_t k = 0; k <= 10; ++k) {
        // P1, P2, P1, P2, ...: kernels alternate between rad P1 and S1.
        EXPECT_TRUE(is_isomorphic(res.terms[k], c.at(k % 2 == 0 ? "P1" : "P2")));
    }
    for (std::size_t k = 0; k < res.differentials.size(); ++k) {
        auto composite = k == 0 ? res.augmentation * res.differentials[0] : res.differentials[k - 1] * res.differentials[k];
        EXPECT_TRUE(composite.is_zero());
    }
}

TEST_F(Cyclic, RelativeResolutionOfM1IsShort) {
    auto res = f_resolution(c.at("M1"), f, 10);
    EXPECT_FALSE(res.truncated);
    EXPECT_LE(res.length(), 1u);
    EXPECT_TRUE(f_resolution(c.at("S2"), f, 10).length() == 0);
}

TEST_F(Cyclic, ResolutionSequencesAreFExact) {
    for (const auto& x : corpus) {
        auto res = f_resolution(x.module, f, 4);
        auto current = res.augmentation;
        for (std::size_t k = 0; k <= res.differentials.size(); ++k) {
            auto ker = kernel(current);
            auto im = image(current);
            EXPECT_TRUE(is_f_epi(induced_into_submodule(im.inclusion, current), f));
            if (k == res.differentials.size()) break;
            current = res.differentials[k];
        }
    }
}

TEST_F(Cyclic, ExtZeroIsHom) {
    for (auto* g : {&f, &ordinary})
        for (const auto& x : corpus)
            for (const auto& y : corpus)
                EXPECT_EQ(ext_f(x.module, y.module, 0, *g), hom_space(x.module, y.module).dim()) << x.name << y.name;
}

TEST_F(Cyclic, RelativeExtTwoVanishes) {
    for (const auto& x : corpus) {
        auto res = f_resolution(x.module, f, 3);
        for (const auto& y : corpus) EXPECT_EQ(ext_from_resolution(res, y.module, 2), 0u) << x.name << y.name;
    }
}

TEST_F(Cyclic, OrdinaryExtOneOfSimples) {
    EXPECT_EQ(ext_f(c.at("S1"), c.at("S2"), 1, ordinary), 1u);
    EXPECT_EQ(ext_f(c.at("S1"), c.at("S3"), 1, ordinary), 0u);
    // direct oracle: Hom(P2, S2) = k, and the map from Hom(P1, S2) = 0
    EXPECT_EQ(hom_space(c.at("P2"), c.at("S2")).dim(), 1u);
    EXPECT_EQ(hom_space(c.at("P1"), c.at("S2")).dim(), 0u);
}

TEST_F(Cyclic, TruncatedResolutionIsUndeterminable) {
    auto res = f_resolution(c.at("S1"), ordinary, 2);
    EXPECT_NO_THROW(ext_from_resolution(res, c.at("S1"), 1));
    EXPECT_THROW(ext_from_resolution(res, c.at("S1"), 2), undeterminable_error);
}

TEST_F(Cyclic, ProjectiveDimensions) {
    EXPECT_EQ(pd_f(c.at("S2"), f, 10), DimValue::exact(0));
    auto m1 = pd_f(c.at("M1"), f, 10);
    EXPECT_FALSE(m1.censored());
    EXPECT_LE(m1.value, 1u);
    auto s1 = pd_f(c.at("S1"), ordinary, 10);
    EXPECT_EQ(s1, DimValue::at_least(10));
    EXPECT_EQ(s1.str(), "≥ 10");
}

TEST_F(Cyclic, GlobalDimensions) {
    auto rel = gldim_f(corpus, f, 10);
    EXPECT_FALSE(rel.value.censored());
    EXPECT_LE(rel.value.value, 1u);
    EXPECT_EQ(rel.breakdown.size(), 9u);
    auto ord = gldim_f(corpus, ordinary, 10);
    EXPECT_EQ(ord.value, DimValue::at_least(10));
    EXPECT_EQ(findim_f(corpus, ordinary, 10).value, DimValue::exact(0));
    EXPECT_THROW(gldim_f({}, f, 10), std::invalid_argument);
}

TEST_F(Cyclic, ExtVanishesPastPdF) {
    for (const auto& x : corpus) {
        auto pd = pd_f(x.module, f, 10);
        ASSERT_FALSE(pd.censored());
        auto res = f_resolution(x.module, f, pd.value + 2);
        bool some_nonzero = false;
        for (const auto& y : corpus) {
            EXPECT_EQ(ext_from_resolution(res, y.module, pd.value + 1), 0u);
            if (ext_from_resolution(res, y.module, pd.value) != 0) some_nonzero = true;
        }
        EXPECT_TRUE(some_nonzero) << x.name;
    }
}

bool same_up_to_iso(const std::vector<NamedModule<Q>>& a, const std::vector<Representation<Q>>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& x : b) {
        bool found = false;
        for (const auto& y : a)
            if (is_isomorphic(x, y.module)) found = true;
        if (!found) return false;
    }
    return true;
}

TEST_F(Cyclic, RelativeInjectives) {
    auto inj = relative_injectives(f, corpus);
    EXPECT_TRUE(inj.validated);
    EXPECT_TRUE(same_up_to_iso(inj.members, {c.at("P1"), c.at("P2"), c.at("P3"), c.at("S3"), c.at("S1"), c.at("M3")}));
    EXPECT_EQ(inj.members.size(), f.summand_count());
    auto ord = relative_injectives(ordinary, corpus);
    EXPECT_TRUE(ord.validated);
    EXPECT_TRUE(same_up_to_iso(ord.members, {injective(alg, 0), injective(alg, 1), injective(alg, 2)}));
}

TEST_F(Cyclic, Syzygies) {
    for (const auto& s : f.summands()) EXPECT_TRUE(syzygy_f(s.module, f).is_zero());
    EXPECT_TRUE(is_isomorphic(syzygy_f(c.at("S1"), ordinary), radical(c.at("P1")).module));
    auto inj = relative_injectives(f, corpus);
    FInjectives<Q> fi(alg, inj.members);
    for (const auto& i : inj.members) EXPECT_TRUE(fi.cosyzygy_f(i.module).is_zero()) << i.name;
    for (const auto& x : corpus) {
        auto l = fi.left_approximation(x.module);
        EXPECT_TRUE(l.is_injective()) << x.name;
        EXPECT_TRUE(l.is_homomorphism()) << x.name;
        EXPECT_EQ(fi.id_f(x.module, 10).censored(), false) << x.name;
    }
}

TEST_F(Cyclic, FrobeniusPredicate) {
    auto ord = relative_injectives(ordinary, corpus);
    EXPECT_TRUE(is_f_frobenius(ordinary, ord.members));
    auto inj = relative_injectives(f, corpus);
    EXPECT_FALSE(is_f_frobenius(f, inj.members));
}

TEST(RelHom, A2IsNotFrobenius) {
    auto alg = a2();
    auto ord = SubbifunctorF<Q>::ordinary(alg);
    auto corpus = basic_corpus(alg);
    auto inj = relative_injectives(ord, corpus);
    EXPECT_FALSE(is_f_frobenius(ord, inj.members));
    // I1 = S1 is not projective.
    EXPECT_FALSE(ord.find_summand(injective(alg, 0)).has_value());
}

TEST(RelHom, SemisimpleHasGlobalDimensionZero) {
    auto alg = PathAlgebra<Q>::build({}, Quiver(2, {}), {}, 2);
    auto ord = SubbifunctorF<Q>::ordinary(alg);
    EXPECT_EQ(gldim_f(basic_corpus(alg), ord, 10).value, DimValue::exact(0));
}

// ---------------------------------------------------------------------------
// Properties

struct Generator {
    AlgebraPtr<Q> alg;
    std::vector<NamedModule<Q>> corpus;
    std::mt19937_64 rng;
    CoefficientSampler<Q> coeffs;

    Generator(AlgebraPtr<Q> a, std::uint64_t seed)
        : alg(std::move(a)), corpus(cyclic3_list(alg)), rng(seed), coeffs(Q{}, seed) {}

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

    Representation<Q> module() {
        auto a = corpus[pick(corpus.size())].module;
        if (pick(2) == 0) return a;
        return direct_sum(alg, {a, corpus[pick(corpus.size())].module}).sum;
    }

    /// A submodule generated by one random element.
    SubmoduleResult<Q> cyclic_submodule(const Representation<Q>& m) {
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < m.vertex_count(); ++v)
            if (m.dim(v) > 0) vs.push_back(v);
        auto v = vs[pick(vs.size())];
        auto elem = Matrix<Q>(Q{}, m.dim(v), 1, coeffs.vector(m.dim(v)));
        return image(map_from_projective(m, v, elem));
    }

    ModuleMap<Q> hom(const Representation<Q>& a, const Representation<Q>& b) {
        auto h = hom_space(a, b);
        if (h.dim() == 0) return ModuleMap<Q>::zero(a, b);
        return h.combine(coeffs.vector(h.dim()));
    }
};

TEST(RelHomProperty, CompositeOfFEpimorphisms) {
    auto alg = cyclic3();
    auto f = cyclic3_structure(alg);
    Generator gen(alg, 2024);
    int checked = 0;
    for (int trial = 0; trial < 20000 && checked < 200; ++trial) {
        auto b = gen.module();
        if (b.is_zero()) continue;
        auto q1 = quotient(b, gen.cyclic_submodule(b).inclusion.components());
        if (!is_f_epi(q1.projection, f) || q1.module.is_zero()) continue;
        auto q2 = quotient(q1.module, gen.cyclic_submodule(q1.module).inclusion.components());
        if (!is_f_epi(q2.projection, f)) continue;
        EXPECT_TRUE(is_f_epi(q2.projection * q1.projection, f));
        ++checked;
    }
    // F-epimorphisms also arise from approximations and their composites with split epis
    for (const auto& x : gen.corpus) {
        auto a = right_approximation(x.module, f);
        auto ds = direct_sum(alg, {a.sum.sum, x.module});
        auto composite = a.map * ds.projections[0];
        EXPECT_TRUE(is_f_epi(composite, f));
    }
    EXPECT_GE(checked, 200);
}

TEST(RelHomProperty, CompositeOfFMonomorphisms) {
    auto alg = cyclic3();
    auto f = cyclic3_structure(alg);
    Generator gen(alg, 99);
    int checked = 0;
    for (int trial = 0; trial < 20000 && checked < 200; ++trial) {
        auto b = gen.module();
        if (b.is_zero()) continue;
        auto s1 = gen.cyclic_submodule(b);
        if (!is_f_mono(s1.inclusion, f) || s1.module.is_zero()) continue;
        auto s2 = gen.cyclic_submodule(s1.module);
        if (!is_f_mono(s2.inclusion, f)) continue;
        EXPECT_TRUE(is_f_mono(s1.inclusion * s2.inclusion, f));
        ++checked;
    }
    EXPECT_GE(checked, 200);
}

/// Adds the contractible piece G --1--> G in degrees -(k+1) -> -k.
FResolution<Q> pad(const FResolution<Q>& res, std::size_t k, const Representation<Q>& g) {
    const auto& alg = res.target.algebra_ptr();
    const auto n = std::max(res.terms.size(), k + 2);
    std::vector<std::optional<DirectSum<Q>>> sums(n);
    FResolution<Q> out;
    out.target = res.target;
    out.truncated = res.truncated;
    out.minimal = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == k || i == k + 1) {
            sums[i] = direct_sum(alg, {res.term(i), g});
            out.terms.push_back(sums[i]->sum);
        } else {
            out.terms.push_back(res.term(i));
        }
    }
    out.augmentation = k == 0 ? res.augmentation * sums[0]->projections[0] : res.augmentation;
    for (std::size_t i = 1; i < n; ++i) {
        auto d = res.differential(i);
        if (i == k + 1)
            d = sums[k]->injections[0] * d * sums[k + 1]->projections[0] + sums[k]->injections[1] * sums[k + 1]->projections[1];
        else if (i == k)
            d = d * sums[k]->projections[0];
        else if (i == k + 2)
            d = sums[k + 1]->injections[0] * d;
        out.differentials.push_back(d);
    }
    return out;
}

TEST(RelHomProperty, ExtIsIndependentOfResolution) {
    auto alg = cyclic3();
    auto c = cyclic3_corpus(alg);
    auto corpus = cyclic3_list(alg);
    for (const auto* name : {"relative", "ordinary"}) {
        auto f = std::string(name) == "relative" ? cyclic3_structure(alg) : SubbifunctorF<Q>::ordinary(alg);
        std::mt19937_64 rng(5);
        for (const auto& x : corpus) {
            auto res = f_resolution(x.module, f, 6);
            auto k = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
            auto j = std::uniform_int_distribution<std::size_t>(0, f.summand_count() - 1)(rng);
            auto padded = pad(res, k, f.summand(j));
            for (std::size_t i = 0; i + 1 < padded.differentials.size(); ++i) {
                auto a = i == 0 ? padded.augmentation : padded.differentials[i - 1];
                EXPECT_TRUE((a * padded.differentials[i]).is_zero());
            }
            for (const auto& y : corpus)
                for (std::size_t i = 0; i <= 4; ++i)
                    EXPECT_EQ(ext_from_resolution(res, y.module, i), ext_from_resolution(padded, y.module, i))
                        << name << " " << x.name << " " << y.name << " " << i;
        }
    }
}

TEST(RelHomProperty, PushoutStability) {
    auto alg = cyclic3();
    auto f = cyclic3_structure(alg);
    Generator gen(alg, 77);
    std::vector<ShortExactSeq<Q>> seqs;
    for (const auto& x : gen.corpus) {
        auto a = right_approximation(x.module, f);
        auto ker = kernel(a.map);
        seqs.push_back({ker.inclusion, a.map});
        for (const auto& y : gen.corpus) {
            auto ds = direct_sum(alg, {y.module, x.module});
            seqs.push_back({ds.injections[0], ds.projections[1]});
        }
    }
    int checked = 0;
    for (int trial = 0; checked < 200; ++trial) {
        const auto& s = seqs[gen.pick(seqs.size())];
        ASSERT_TRUE(is_f_exact(s, f));
        auto target = gen.module();
        auto u = gen.hom(s.f.source(), target);
        auto po = pushout(u, s.f);
        auto g = induced_from_quotient(
            po.projection, map_from_sum(po.sum, {ModuleMap<Q>::zero(target, s.g.target()), s.g}, s.g.target()));
        ShortExactSeq<Q> pushed{po.from_first, g};
        EXPECT_TRUE(pushed.is_exact());
        EXPECT_TRUE(is_f_exact(pushed, f));
        ++checked;
    }
}

}  // namespace
}  // namespace relhom

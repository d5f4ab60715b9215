#pragma once

// F-tilting complexes: verification, the endomorphism algebra End_K(T) and the
// image Hom(G, T) over Σ = End(G).

#include "relhom/absalg/homological.hpp"
#include "relhom/complexcat/relative.hpp"

#include <map>
#include <set>

namespace relhom {

/// Modules over an abstract algebra, as a category for complexcat.
template <ExactField F>
struct AbstractModules {
    using Field = F;
    using Object = AbstractModule<F>;
    using Morphism = AbstractHom<F>;
    using Context = AbstractAlgebraPtr<F>;

    static Context context(const Object& o) { return o.algebra_ptr(); }
    static const F& field(const Context& c) { return c->field(); }
    static Object zero_object(const Context& c) { return AbstractModule<F>::zero(c); }
    static bool is_zero(const Object& o) { return o.is_zero(); }
    static Morphism zero_map(const Object& a, const Object& b) { return AbstractHom<F>::zero(a, b); }
    static Morphism identity(const Object& a) { return AbstractHom<F>::identity(a); }
    static std::vector<Morphism> hom_basis(const Object& a, const Object& b) { return abstract_hom_basis(a, b); }
    static std::size_t flat_size(const Object& a, const Object& b) { return a.dim() * b.dim(); }
    static Morphism unflatten(const Object& a, const Object& b, std::span<const typename F::value_type> v) {
        return AbstractHom<F>(a, b, Matrix<F>::unflatten(a.field(), b.dim(), a.dim(), v));
    }
    static AbstractSum<F> sum(const Context& c, const std::vector<Object>& parts) { return direct_sum(c, parts); }
};

template <ExactField F>
using AComplex = Complex<AbstractModules<F>>;

template <ExactField F>
struct TiltingSummand {
    std::string name;
    LComplex<F> complex;
};

/// One cone in a generation witness: the cone of a map between sums of shifted,
/// already generated objects, expected to be homotopy equivalent to a stalk
/// complex whose blocks are the named summands of G.
template <ExactField F>
struct WitnessStep {
    std::string name;
    std::vector<std::pair<std::string, int>> source;   // (object, shift)
    std::vector<std::pair<std::string, int>> target;
    std::vector<std::string> expect;                   // summands of G
    std::optional<std::vector<typename F::value_type>> coefficients;  // in the hom_k basis; searched when absent
};

struct WitnessResult {
    std::string name;
    bool valid = false;
    std::string detail;
    std::vector<std::string> produced;
};

/// Γ = End_K(T) by structure constants on homotopy class representatives.
template <ExactField F>
struct EndoPresentation {
    using Vec = std::vector<typename F::value_type>;
    HomK<LambdaModules<F>> hom;
    std::vector<std::vector<Vec>> products;  // products[a][b] = coordinates of a ∘ b
    Vec unit;
    std::vector<Vec> idempotents;            // one per summand
    AbstractAlgebraPtr<F> algebra;
    [[nodiscard]] std::size_t dim() const { return hom.dim(); }
};

template <ExactField F>
LComplex<F> sum_of(const AlgebraPtr<F>& alg, const std::vector<TiltingSummand<F>>& parts) {
    std::vector<LComplex<F>> c;
    for (const auto& p : parts) c.push_back(p.complex);
    return direct_sum(alg, c).sum;
}

/// Structure constants of End_K(T) for T = (+) parts, with the summand idempotents.
/// The radical comes from the trace form in characteristic zero and from the summand idempotents otherwise.
template <ExactField F>
EndoPresentation<F> end_algebra(const AlgebraPtr<F>& alg, const std::vector<TiltingSummand<F>>& parts) {
    using Vec = std::vector<typename F::value_type>;
    std::vector<LComplex<F>> cs;
    for (const auto& p : parts) cs.push_back(p.complex);
    auto sum = direct_sum(alg, cs);
    const auto& t = sum.sum;
    auto h = hom_k(t, t, 0);
    const auto d = h.dim();
    const auto& field = alg->field();
    EndoPresentation<F> out{h, std::vector<std::vector<Vec>>(d, std::vector<Vec>(d)), {}, {}, nullptr};
    if (d == 0) throw std::invalid_argument("End(T) is zero");
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) out.products[a][b] = h.coordinates(h.basis[a] * h.basis[b]);
    out.unit = h.coordinates(LChainMap<F>::identity(t));
    for (std::size_t k = 0; k < parts.size(); ++k) {
        auto e = h.coordinates(sum.injections[k] * sum.projections[k]);
        if (std::any_of(e.begin(), e.end(), [](const auto& x) { return !x.is_zero(); })) out.idempotents.push_back(e);
    }
    if (out.idempotents.size() <= 1) out.idempotents = {out.unit};
    out.algebra = AbstractAlgebra<F>::make(field, out.products, out.unit, std::nullopt, out.idempotents);
    return out;
}

template <ExactField F>
struct TiltingReport {
    LComplex<F> complex;
    std::vector<std::string> summand_names;
    bool in_add_g = true;
    std::vector<std::pair<int, std::size_t>> self_orthogonal;  // (i, dim hom_k(T, T, i)) over the window
    bool orthogonal = true;
    std::size_t term_length = 0;
    std::size_t declared_count = 0;
    std::size_t pf_count = 0;
    bool count_ok = false;
    std::vector<std::pair<std::string, std::string>> summand_local;  // name, "local" | "not local" | "unknown"
    std::string generation = "not checked";
    std::vector<WitnessResult> witnesses;
    std::set<std::string> generated;
    std::size_t endo_dim = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool passed() const { return failures.empty(); }
};

namespace detail {

/// G_j named by each block of a stalk complex, if every block is a summand.
template <ExactField F>
std::optional<std::vector<std::string>> stalk_summands(const LComplex<F>& x, const SubbifunctorF<F>& f) {
    auto s = x.support();
    if (!s || s->first != s->second) return std::nullopt;
    std::vector<std::string> out;
    for (const auto& b : x.blocks(s->first)) {
        auto j = f.find_summand(b);
        if (!j) return std::nullopt;
        out.push_back(f.summands()[*j].name);
    }
    return out;
}

template <ExactField F>
bool in_add_g(const Representation<F>& m, const SubbifunctorF<F>& f) {
    if (m.is_zero() || f.find_summand(m)) return true;
    return right_approximation(m, f).map.is_isomorphism();
}

}  // namespace detail

/// Checks the parts of T = (+) parts against F: terms in add G, hom_k(T, T, i) = 0
/// for 0 < |i| ≤ 2 width + 1, the summand count against |ind P(F)|, and, when
/// witnesses are given, that each cone step produces the expected summands of G.
template <ExactField F>
TiltingReport<F> verify_f_tilting(const std::vector<TiltingSummand<F>>& parts, const SubbifunctorF<F>& f,
                                  const std::vector<WitnessStep<F>>& witnesses = {},
                                  std::optional<std::size_t> declared_count = std::nullopt) {
    const auto& alg = f.algebra_ptr();
    TiltingReport<F> r;
    r.complex = sum_of(alg, parts);
    for (const auto& p : parts) r.summand_names.push_back(p.name);
    const auto& t = r.complex;

    for (int i = t.lo(); i <= t.hi() && !t.empty(); ++i)
        for (const auto& b : t.blocks(i))
            if (!detail::in_add_g(b, f)) {
                r.in_add_g = false;
                r.failures.push_back("term in degree " + std::to_string(i) + " is not in add G");
            }

    const int window = 2 * static_cast<int>(t.width()) + 1;
    for (int i = -window; i <= window; ++i) {
        if (i == 0) continue;
        auto d = hom_k(t, t, i).dim();
        r.self_orthogonal.emplace_back(i, d);
        if (d != 0) {
            r.orthogonal = false;
            r.failures.push_back("Hom(T, T[" + std::to_string(i) + "]) has dimension " + std::to_string(d));
        }
    }
    r.term_length = term_length(t);

    r.declared_count = declared_count.value_or(parts.size());
    r.pf_count = f.summand_count();
    r.count_ok = r.declared_count == r.pf_count && r.declared_count == parts.size();
    if (!r.count_ok)
        r.failures.push_back("declared summand count " + std::to_string(r.declared_count) + " (listed " +
                             std::to_string(parts.size()) + ") differs from |ind P(F)| = " + std::to_string(r.pf_count));

    const bool char0 = alg->field().characteristic() == 0;
    for (const auto& p : parts) {
        std::string status = "unknown";
        if (char0) {
            auto e = end_algebra(alg, std::vector<TiltingSummand<F>>{p});
            status = top_report(e.algebra).top_dim == 1 ? "local" : "not local";
            if (status == "not local") r.failures.push_back("summand " + p.name + " has a non-local endomorphism ring");
        }
        r.summand_local.emplace_back(p.name, status);
    }

    if (r.count_ok && r.in_add_g) r.generation = "count-criterion passed";
    std::map<std::string, LComplex<F>> pool;
    for (const auto& p : parts) {
        pool[p.name] = p.complex;
        if (auto g = detail::stalk_summands(radical_normalize(p.complex), f))
            for (const auto& n : *g) r.generated.insert(n);
    }
    auto add_stalk = [&](const std::string& n) {
        for (std::size_t j = 0; j < f.summand_count(); ++j)
            if (f.summands()[j].name == n) pool.emplace(n, LComplex<F>::stalk(f.summand(j), 0, {f.summand(j)}));
    };
    for (const auto& n : r.generated) add_stalk(n);
    bool all_valid = true;
    for (const auto& w : witnesses) {
        WitnessResult wr{w.name, false, "", {}};
        auto build = [&](const std::vector<std::pair<std::string, int>>& list) -> std::optional<LComplex<F>> {
            std::vector<LComplex<F>> cs;
            for (const auto& [name, s] : list) {
                auto it = pool.find(name);
                if (it == pool.end()) return std::nullopt;
                cs.push_back(shift(it->second, s));
            }
            return direct_sum(alg, cs).sum;
        };
        auto src = build(w.source), tgt = build(w.target);
        if (!src || !tgt) {
            wr.detail = "refers to an object not yet generated";
        } else {
            auto h = hom_k(*src, *tgt, 0);
            std::vector<LChainMap<F>> candidates;
            if (w.coefficients) {
                if (w.coefficients->size() != h.dim())
                    wr.detail = "expected " + std::to_string(h.dim()) + " coefficients";
                else
                    candidates.push_back(h.combine(*w.coefficients));
            } else {
                for (const auto& b : h.basis) candidates.push_back(b);
                CoefficientSampler<F> sampler(alg->field());
                for (int k = 0; k < 16 && h.dim() > 1; ++k) candidates.push_back(h.combine(sampler.vector(h.dim())));
            }
            auto expected = w.expect;
            std::sort(expected.begin(), expected.end());
            for (const auto& m : candidates) {
                auto c = cone(ChainMap<LambdaModules<F>>(m.source(), *tgt, m.components(), false)).complex;
                auto names = detail::stalk_summands(radical_normalize(c), f);
                if (!names) continue;
                auto sorted = *names;
                std::sort(sorted.begin(), sorted.end());
                if (!expected.empty() && sorted != expected) continue;
                wr.valid = true;
                wr.produced = *names;
                pool[w.name] = c;
                for (const auto& n : *names) {
                    r.generated.insert(n);
                    add_stalk(n);
                }
                break;
            }
            if (!wr.valid && wr.detail.empty()) wr.detail = "no map found whose cone is the expected stalk complex";
        }
        if (!wr.valid) {
            all_valid = false;
            r.failures.push_back("witness " + w.name + ": " + wr.detail);
        }
        r.witnesses.push_back(std::move(wr));
    }
    if (!witnesses.empty() && all_valid && r.count_ok && r.in_add_g && r.generated.size() == f.summand_count())
        r.generation = "witnessed";
    else if (!witnesses.empty() && all_valid && r.generated.size() != f.summand_count())
        r.failures.push_back("witnesses generate " + std::to_string(r.generated.size()) + " of " +
                             std::to_string(f.summand_count()) + " summands of G");
    r.endo_dim = hom_k(t, t, 0).dim();
    return r;
}

/// Hom(G, T) as a complex of Σ^op-modules, Σ = End(G) with a·b = a ∘ b, so that
/// Hom(G, X) is a left Σ^op-module through φ ↦ φ ∘ a.
template <ExactField F>
struct SigmaImage {
    EndoPresentation<F> sigma;
    AbstractAlgebraPtr<F> sigma_op;
    AComplex<F> complex;
    std::vector<std::tuple<int, std::size_t, std::size_t>> window;  // (i, over Λ, over Σ)
    bool matches = true;
};

template <ExactField F>
SigmaImage<F> image_tilting_over_sigma(const LComplex<F>& t, const SubbifunctorF<F>& f) {
    const auto& alg = f.algebra_ptr();
    std::vector<TiltingSummand<F>> gparts;
    std::vector<Representation<F>> gblocks;
    for (const auto& s : f.summands()) {
        gparts.push_back({s.name, stalk(s.module)});
        gblocks.push_back(s.module);
    }
    auto sigma = end_algebra(alg, gparts);
    auto sop = sigma.algebra->opposite();
    auto g = direct_sum(alg, gblocks).sum;
    std::vector<ModuleMap<F>> acts;  // degree-0 components of the Σ basis
    for (const auto& b : sigma.hom.basis) acts.push_back(b.at(0));

    struct Image {
        HomSpace<F> hom;
        AbstractModule<F> module;
    };
    auto image_of = [&](const Representation<F>& x) {
        auto h = hom_space(g, x);
        std::vector<Matrix<F>> act;
        for (const auto& a : acts) {
            std::vector<std::vector<typename F::value_type>> cols;
            for (const auto& phi : h.basis) cols.push_back(h.coordinates(phi * a));
            act.push_back(from_columns(alg->field(), h.dim(), cols));
        }
        return Image{h, AbstractModule<F>(sop, h.dim(), std::move(act))};
    };

    SigmaImage<F> out{sigma, sop, AComplex<F>::zero(sop), {}, true};
    if (!t.empty()) {
        std::vector<std::vector<Image>> imgs;
        std::vector<AbstractModule<F>> terms;
        std::vector<std::vector<AbstractModule<F>>> blocks;
        for (int i = t.lo(); i <= t.hi(); ++i) {
            std::vector<Image> row;
            std::vector<AbstractModule<F>> mods;
            for (const auto& b : t.blocks(i)) {
                row.push_back(image_of(b));
                mods.push_back(row.back().module);
            }
            terms.push_back(direct_sum(sop, mods).sum);
            blocks.push_back(std::move(mods));
            imgs.push_back(std::move(row));
        }
        std::vector<AbstractHom<F>> diffs;
        for (int i = t.lo(); i < t.hi(); ++i) {
            auto k = static_cast<std::size_t>(i - t.lo());
            auto ls = direct_sum(alg, t.blocks(i)), lt = direct_sum(alg, t.blocks(i + 1));
            auto as = direct_sum(sop, blocks[k]), at = direct_sum(sop, blocks[k + 1]);
            auto d = AbstractHom<F>::zero(as.sum, at.sum);
            for (std::size_t b = 0; b < imgs[k].size(); ++b)
                for (std::size_t c = 0; c < imgs[k + 1].size(); ++c) {
                    auto comp = lt.projections[c] * t.d(i) * ls.injections[b];
                    const auto& src = imgs[k][b];
                    const auto& tgt = imgs[k + 1][c];
                    std::vector<std::vector<typename F::value_type>> cols;
                    for (const auto& phi : src.hom.basis) cols.push_back(tgt.hom.coordinates(comp * phi));
                    AbstractHom<F> m(src.module, tgt.module, from_columns(alg->field(), tgt.hom.dim(), cols));
                    d = d + at.injections[c] * m * as.projections[b];
                }
            diffs.push_back(std::move(d));
        }
        out.complex = AComplex<F>(sop, t.lo(), std::move(terms), std::move(diffs), std::move(blocks));
    }
    const int window = 2 * static_cast<int>(t.width()) + 1;
    for (int i = -window; i <= window; ++i) {
        auto a = hom_k(t, t, i).dim();
        auto b = hom_k(out.complex, out.complex, i).dim();
        out.window.emplace_back(i, a, b);
        if (a != b) out.matches = false;
    }
    return out;
}

}  // namespace relhom

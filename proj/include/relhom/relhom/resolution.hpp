#pragma once

// F-projective resolutions, Ext_F, relative dimensions, I(F) and F-syzygies.

#include "relhom/dimension.hpp"
#include "relhom/relhom/subbifunctor.hpp"

namespace relhom {

template <ExactField F>
struct FResolution {
    Representation<F> target;
    std::vector<Representation<F>> terms;             // terms[k] = P^{-k}
    std::vector<std::vector<std::size_t>> parts;      // add(G) decomposition of each term
    std::vector<ModuleMap<F>> differentials;          // differentials[k]: P^{-(k+1)} -> P^{-k}
    ModuleMap<F> augmentation;                        // P^0 -> X
    bool minimal = true;
    bool truncated = false;                           // the last kernel is nonzero

    [[nodiscard]] std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }

    [[nodiscard]] Representation<F> term(std::size_t k) const {
        return k < terms.size() ? terms[k] : Representation<F>::zero(target.algebra_ptr());
    }
    /// P^{-k} -> P^{-(k-1)} for k >= 1.
    [[nodiscard]] ModuleMap<F> differential(std::size_t k) const {
        if (k >= 1 && k - 1 < differentials.size()) return differentials[k - 1];
        return ModuleMap<F>::zero(term(k), term(k - 1));
    }
};

/// Iterated minimal right approximations of successive F-syzygies, computing
/// P^0 .. P^{-maxlen}.
template <ExactField F>
FResolution<F> f_resolution(const Representation<F>& x, const SubbifunctorF<F>& f, std::size_t maxlen) {
    FResolution<F> res;
    res.target = x;
    auto current = x;
    ModuleMap<F> inclusion;
    for (std::size_t k = 0;; ++k) {
        auto a = right_approximation(current, f);
        res.terms.push_back(a.sum.sum);
        res.parts.push_back(a.parts);
        if (k == 0)
            res.augmentation = a.map;
        else
            res.differentials.push_back(inclusion * a.map);
        auto ker = kernel(a.map);
        if (ker.module.is_zero()) break;
        if (k == maxlen) {
            res.truncated = true;
            break;
        }
        current = ker.module;
        inclusion = ker.inclusion;
    }
    return res;
}

/// Columns: flattened composites b ∘ d over a basis b of Hom(T, Y), for d: S -> T.
template <ExactField F>
Matrix<F> pullback_matrix(const HomSpace<F>& h, const ModuleMap<F>& d) {
    std::size_t rows = 0;
    for (std::size_t v = 0; v < d.source().vertex_count(); ++v) rows += h.target.dim(v) * d.source().dim(v);
    std::vector<std::vector<typename F::value_type>> cols;
    for (const auto& b : h.basis) cols.push_back((b * d).flatten());
    return from_columns(d.field(), rows, cols);
}

/// dim H^i Hom(P_X, Y).
template <ExactField F>
std::size_t ext_from_resolution(const FResolution<F>& res, const Representation<F>& y, std::size_t i) {
    if (res.truncated && i + 1 >= res.terms.size())
        throw undeterminable_error("resolution truncated before degree " + std::to_string(i + 1));
    auto hi = hom_space(res.term(i), y);
    if (hi.dim() == 0) return 0;
    auto out = rank(pullback_matrix(hi, res.differential(i + 1)));
    std::size_t in = 0;
    if (i > 0) in = rank(pullback_matrix(hom_space(res.term(i - 1), y), res.differential(i)));
    return hi.dim() - out - in;
}

template <ExactField F>
std::size_t ext_f(const Representation<F>& x, const Representation<F>& y, std::size_t i, const SubbifunctorF<F>& f) {
    return ext_from_resolution(f_resolution(x, f, i + 1), y, i);
}

template <ExactField F>
DimValue pd_f(const Representation<F>& x, const SubbifunctorF<F>& f, std::size_t cutoff) {
    if (cutoff == 0) throw std::invalid_argument("cutoff must be positive");
    auto res = f_resolution(x, f, cutoff - 1);
    return res.truncated ? DimValue::at_least(cutoff) : DimValue::exact(res.length());
}

/// Ω_F X.
template <ExactField F>
Representation<F> syzygy_f(const Representation<F>& x, const SubbifunctorF<F>& f) {
    return kernel(right_approximation(x, f).map).module;
}

template <ExactField F>
DimensionReport gldim_f(const std::vector<NamedModule<F>>& corpus, const SubbifunctorF<F>& f, std::size_t cutoff) {
    if (corpus.empty()) throw std::invalid_argument("gldim_f: empty corpus");
    DimensionReport r{"gldim_F", {}, cutoff, {}, "supremum over the supplied corpus; exact when it lists every indecomposable"};
    std::vector<DimValue> vals;
    for (const auto& m : corpus) {
        vals.push_back(pd_f(m.module, f, cutoff));
        r.breakdown.emplace_back(m.name, vals.back());
    }
    r.value = dim_max(vals, cutoff);
    return r;
}

template <ExactField F>
DimensionReport findim_f(const std::vector<NamedModule<F>>& corpus, const SubbifunctorF<F>& f, std::size_t cutoff) {
    if (corpus.empty()) throw std::invalid_argument("findim_f: empty corpus");
    DimensionReport r{"fd_F", DimValue::exact(0), cutoff, {}, "maximum over corpus members of finite pd_F; a lower bound"};
    for (const auto& m : corpus) {
        auto v = pd_f(m.module, f, cutoff);
        r.breakdown.emplace_back(m.name, v);
        if (!v.censored()) r.value.value = std::max(r.value.value, v.value);
    }
    return r;
}

/// I(F) together with the exact structure D I(F) over the opposite algebra,
/// through which left I(F)-approximations are computed.
template <ExactField F>
class FInjectives {
public:
    FInjectives(AlgebraPtr<F> alg, std::vector<NamedModule<F>> members)
        : alg_(std::move(alg)), opp_(alg_->opposite()), members_(std::move(members)), dual_(make_dual()) {}

    [[nodiscard]] const std::vector<NamedModule<F>>& members() const { return members_; }
    [[nodiscard]] const SubbifunctorF<F>& dual_structure() const { return dual_; }
    [[nodiscard]] const AlgebraPtr<F>& opposite() const { return opp_; }

    /// Minimal left add I(F)-approximation X -> I'.
    [[nodiscard]] ModuleMap<F> left_approximation(const Representation<F>& x) const {
        auto a = right_approximation(dual(x, opp_), dual_);
        return dual(a.map, alg_);
    }

    [[nodiscard]] DimValue id_f(const Representation<F>& x, std::size_t cutoff) const {
        return pd_f(dual(x, opp_), dual_, cutoff);
    }

    /// Ω_F^{-1} X.
    [[nodiscard]] Representation<F> cosyzygy_f(const Representation<F>& x) const {
        return cokernel(left_approximation(x)).module;
    }

private:
    SubbifunctorF<F> make_dual() const {
        std::vector<Summand<F>> s;
        for (const auto& m : members_) s.push_back({"D" + m.name, dual(m.module, opp_), 1});
        return SubbifunctorF<F>(opp_, std::move(s));
    }

    AlgebraPtr<F> alg_;
    AlgebraPtr<F> opp_;
    std::vector<NamedModule<F>> members_;
    SubbifunctorF<F> dual_;
};

template <ExactField F>
struct RelativeInjectivesResult {
    std::vector<NamedModule<F>> members;
    bool validated = true;
    std::vector<std::string> failures;
};

/// Candidate I(F) = {DTr Z : Z a non-projective summand of G} ∪ {injectives},
/// deduplicated, and checked against Ext_F^1(X, I) = 0 on the corpus.
template <ExactField F>
RelativeInjectivesResult<F> relative_injectives(const SubbifunctorF<F>& f, const std::vector<NamedModule<F>>& corpus) {
    const auto& alg = f.algebra_ptr();
    RelativeInjectivesResult<F> out;
    auto add = [&](std::string name, const Representation<F>& m) {
        if (m.is_zero()) return;
        for (const auto& e : out.members)
            if (is_isomorphic(e.module, m)) return;
        out.members.push_back({std::move(name), m});
    };
    for (std::size_t j = 0; j < f.summand_count(); ++j)
        if (!f.is_projective_summand(j)) add("DTr(" + f.summands()[j].name + ")", dtr(f.summand(j)));
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) add("I" + std::to_string(v + 1), injective(alg, v));

    std::vector<NamedModule<F>> tests = corpus;
    for (const auto& s : f.summands()) tests.push_back({s.name, s.module});
    for (const auto& x : tests) {
        auto res = f_resolution(x.module, f, 2);
        for (const auto& i : out.members)
            if (ext_from_resolution(res, i.module, 1) != 0) {
                out.validated = false;
                out.failures.push_back("Ext_F^1(" + x.name + ", " + i.name + ") != 0");
            }
    }
    return out;
}

/// P(F) = I(F) up to isomorphism.
template <ExactField F>
bool is_f_frobenius(const SubbifunctorF<F>& f, const std::vector<NamedModule<F>>& injectives) {
    if (f.summand_count() != injectives.size()) return false;
    for (const auto& i : injectives)
        if (!f.find_summand(i.module)) return false;
    return true;
}

}  // namespace relhom

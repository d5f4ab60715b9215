#pragma once

// F = F_{add G}: the exact structure whose projectives are add G.  Provides
// F-exactness checks and minimal right add(G)-approximations.

#include "relhom/quiveralg/module_ops.hpp"

#include <algorithm>
#include <string>

namespace relhom {

template <ExactField F>
struct Summand {
    std::string name;
    Representation<F> module;
    std::size_t multiplicity = 1;
};

template <ExactField F>
struct NamedModule {
    std::string name;
    Representation<F> module;
};

/// λ with e − λ·1 nilpotent, when such a scalar exists.
template <ExactField F>
std::optional<typename F::value_type> scalar_part(const ModuleMap<F>& e) {
    const auto& m = e.source();
    const auto& field = m.field();
    if (m.is_zero()) return field.zero();
    auto shifted = [&](const typename F::value_type& a) { return e - a * ModuleMap<F>::identity(m); };
    std::optional<typename F::value_type> lambda;
    for (std::size_t v = 0; v < m.vertex_count() && !lambda; ++v) {
        const auto d = m.dim(v);
        if (d == 0 || (field.characteristic() != 0 && d % field.characteristic() == 0)) continue;
        auto tr = field.zero();
        for (std::size_t i = 0; i < d; ++i) tr += e.component(v)(i, i);
        lambda = tr * field.from_int(static_cast<std::int64_t>(d)).inverse();
    }
    if (!lambda) {
        // every dimension is divisible by a small characteristic: search F_p
        for (std::uint64_t a = 0; a < field.size() && !lambda; ++a) {
            auto x = field.from_int(static_cast<std::int64_t>(a));
            if (is_nilpotent(shifted(x))) lambda = x;
        }
        if (!lambda) return std::nullopt;
    }
    if (!is_nilpotent(shifted(*lambda))) return std::nullopt;
    return lambda;
}

template <ExactField F>
struct Approximation {
    ModuleMap<F> map;                 // G' -> X
    std::vector<std::size_t> parts;   // G' = (+) summand(parts[k])
    DirectSum<F> sum;
};

template <ExactField F>
class SubbifunctorF {
public:
    using value_type = typename F::value_type;

    /// Summands must be pairwise non-isomorphic indecomposables with split local
    /// endomorphism rings, and every indecomposable projective must occur.
    SubbifunctorF(AlgebraPtr<F> alg, std::vector<Summand<F>> summands)
        : alg_(std::move(alg)), summands_(std::move(summands)) {
        if (summands_.empty()) throw std::invalid_argument("generator has no summands");
        for (const auto& s : summands_) {
            if (!same_algebra(*alg_, s.module.algebra()))
                throw std::invalid_argument("summand '" + s.name + "' lives over a different algebra");
            if (s.multiplicity == 0) throw std::invalid_argument("summand '" + s.name + "' has multiplicity 0");
            if (!check_indecomposable(s.module).consistent)
                throw std::invalid_argument("summand '" + s.name + "' is decomposable");
        }
        for (std::size_t i = 0; i < summands_.size(); ++i)
            for (std::size_t j = i + 1; j < summands_.size(); ++j)
                if (is_isomorphic(summands_[i].module, summands_[j].module).verdict != Verdict::no)
                    throw std::invalid_argument("summands '" + summands_[i].name + "' and '" + summands_[j].name +
                                                "' are isomorphic");
        for (std::size_t v = 0; v < alg_->vertex_count(); ++v) {
            auto p = projective(alg_, v);
            bool found = false;
            for (const auto& s : summands_)
                if (is_isomorphic(p, s.module)) {
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("projective P" + std::to_string(v + 1) + " is not a summand of the generator");
        }
        init_cache();
    }

    /// G = Λ, so F-exact means exact.
    static SubbifunctorF ordinary(const AlgebraPtr<F>& alg) {
        std::vector<Summand<F>> s;
        for (std::size_t v = 0; v < alg->vertex_count(); ++v)
            s.push_back({"P" + std::to_string(v + 1), projective(alg, v), 1});
        return SubbifunctorF(alg, std::move(s));
    }

    [[nodiscard]] const AlgebraPtr<F>& algebra_ptr() const { return alg_; }
    [[nodiscard]] const F& field() const { return alg_->field(); }
    [[nodiscard]] const std::vector<Summand<F>>& summands() const { return summands_; }
    [[nodiscard]] std::size_t summand_count() const { return summands_.size(); }
    [[nodiscard]] const Representation<F>& summand(std::size_t j) const { return summands_.at(j).module; }
    [[nodiscard]] const Representation<F>& generator() const { return generator_; }

    /// Hom(G_j, G_i).
    [[nodiscard]] const HomSpace<F>& hom(std::size_t j, std::size_t i) const { return homs_.at(j).at(i); }
    /// Basis of the radical rad(G_j, G_i): all maps for i != j, the non-invertible endomorphisms for i = j.
    [[nodiscard]] const std::vector<ModuleMap<F>>& radical_maps(std::size_t j, std::size_t i) const {
        return rads_.at(j).at(i);
    }

    [[nodiscard]] bool is_projective_summand(std::size_t j) const { return projective_.at(j); }
    [[nodiscard]] bool is_ordinary() const {
        return std::all_of(projective_.begin(), projective_.end(), [](bool b) { return b; });
    }

    /// Index of the summand isomorphic to m, if any.
    [[nodiscard]] std::optional<std::size_t> find_summand(const Representation<F>& m) const {
        for (std::size_t j = 0; j < summands_.size(); ++j)
            if (is_isomorphic(summands_[j].module, m)) return j;
        return std::nullopt;
    }

private:
    void init_cache() {
        std::vector<Representation<F>> parts;
        for (const auto& s : summands_)
            for (std::size_t k = 0; k < s.multiplicity; ++k) parts.push_back(s.module);
        generator_ = direct_sum(alg_, parts).sum;
        const auto n = summands_.size();
        homs_.resize(n);
        rads_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto& g = summands_[j].module;
            projective_.push_back(projective_cover(g).map.source().total_dim() == g.total_dim());
            for (std::size_t i = 0; i < n; ++i) {
                homs_[j].push_back(hom_space(g, summands_[i].module));
                if (i != j) {
                    rads_[j].push_back(homs_[j][i].basis);
                    continue;
                }
                const auto& end = homs_[j][i];
                Matrix<F> lambda(field(), 1, end.dim());
                for (std::size_t k = 0; k < end.dim(); ++k) {
                    auto l = scalar_part(end.basis[k]);
                    if (!l)
                        throw std::invalid_argument("summand '" + summands_[j].name +
                                                    "' does not have a split local endomorphism ring");
                    lambda(0, k) = *l;
                }
                auto ker = kernel_basis(lambda);
                std::vector<ModuleMap<F>> rad;
                for (std::size_t c = 0; c < ker.cols(); ++c) {
                    auto coeffs = ker.column(c).flatten();
                    rad.push_back(end.combine(coeffs));
                }
                rads_[j].push_back(std::move(rad));
            }
        }
    }

    AlgebraPtr<F> alg_;
    std::vector<Summand<F>> summands_;
    Representation<F> generator_;
    std::vector<std::vector<HomSpace<F>>> homs_;
    std::vector<std::vector<std::vector<ModuleMap<F>>>> rads_;
    std::vector<bool> projective_;
};

/// Matrix whose columns are the flattened composites g ∘ h over a basis h of Hom(S, B).
template <ExactField F>
Matrix<F> pushforward_matrix(const HomSpace<F>& h, const ModuleMap<F>& g) {
    std::size_t rows = 0;
    for (std::size_t v = 0; v < h.source.vertex_count(); ++v) rows += g.target().dim(v) * h.source.dim(v);
    std::vector<std::vector<typename F::value_type>> cols;
    for (const auto& b : h.basis) cols.push_back((g * b).flatten());
    return from_columns(g.field(), rows, cols);
}

/// g: B -> C is an F-epimorphism when Hom(G, g) is onto.
template <ExactField F>
bool is_f_epi(const ModuleMap<F>& g, const SubbifunctorF<F>& f) {
    for (std::size_t j = 0; j < f.summand_count(); ++j) {
        auto hc = hom_space(f.summand(j), g.target()).dim();
        if (hc == 0) continue;
        if (rank(pushforward_matrix(hom_space(f.summand(j), g.source()), g)) != hc) return false;
    }
    return true;
}

template <ExactField F>
bool is_f_exact(const ShortExactSeq<F>& ses, const SubbifunctorF<F>& f) {
    return ses.is_exact() && is_f_epi(ses.g, f);
}

/// f: A -> B is an F-monomorphism when 0 -> A -> B -> coker f -> 0 is F-exact.
template <ExactField F>
bool is_f_mono(const ModuleMap<F>& m, const SubbifunctorF<F>& f) {
    if (!m.is_injective()) return false;
    return is_f_epi(cokernel(m).projection, f);
}

/// Minimal right add(G)-approximation.  For each summand G_j the maps
/// G_j -> X modulo those factoring through the radical of add G give the
/// multiplicity of G_j; a pivot-chosen complement supplies the components.
template <ExactField F>
Approximation<F> right_approximation(const Representation<F>& x, const SubbifunctorF<F>& f) {
    const auto& alg = f.algebra_ptr();
    std::vector<HomSpace<F>> to_x;
    for (std::size_t i = 0; i < f.summand_count(); ++i) to_x.push_back(hom_space(f.summand(i), x));

    std::vector<std::size_t> parts;
    std::vector<Representation<F>> modules;
    std::vector<ModuleMap<F>> maps;
    for (std::size_t j = 0; j < f.summand_count(); ++j) {
        const auto& h = to_x[j];
        if (h.dim() == 0) continue;
        std::vector<std::vector<typename F::value_type>> cols;
        for (std::size_t i = 0; i < f.summand_count(); ++i)
            for (const auto& r : f.radical_maps(j, i))
                for (const auto& g : to_x[i].basis) cols.push_back((g * r).flatten());
        auto rad_part = from_columns(f.field(), h.flat.rows(), cols);
        auto piv = independent_columns(hstack(rad_part, h.flat));
        for (auto p : piv) {
            if (p < rad_part.cols()) continue;
            parts.push_back(j);
            modules.push_back(f.summand(j));
            maps.push_back(h.basis[p - rad_part.cols()]);
        }
    }
    auto ds = direct_sum(alg, modules);
    auto map = modules.empty() ? ModuleMap<F>::zero(ds.sum, x) : map_from_sum(ds, maps, x);
    return {std::move(map), std::move(parts), std::move(ds)};
}

/// Right minimality certificate: every map G_j -> G' killed by the approximation
/// has non-invertible components into the copies of G_j.
template <ExactField F>
bool is_right_minimal(const Approximation<F>& a, const SubbifunctorF<F>& f) {
    for (std::size_t j = 0; j < f.summand_count(); ++j) {
        auto h = hom_space(f.summand(j), a.sum.sum);
        if (h.dim() == 0) continue;
        auto ker = kernel_basis(pushforward_matrix(h, a.map));
        for (std::size_t c = 0; c < ker.cols(); ++c) {
            auto phi = h.combine(ker.column(c).flatten());
            for (std::size_t k = 0; k < a.parts.size(); ++k) {
                if (a.parts[k] != j) continue;
                auto l = scalar_part(a.sum.projections[k] * phi);
                if (!l || !l->is_zero()) return false;
            }
        }
    }
    return true;
}

/// Hom(G, a) onto.
template <ExactField F>
bool is_right_approximation(const Approximation<F>& a, const SubbifunctorF<F>& f) {
    return is_f_epi(a.map, f);
}

}  // namespace relhom

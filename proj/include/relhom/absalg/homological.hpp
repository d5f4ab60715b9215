#pragma once

// Free resolutions, Ext and homological dimensions over an AbstractAlgebra;
// re-encoding of path algebras and their representations.

#include "relhom/absalg/algebra.hpp"
#include "relhom/dimension.hpp"
#include "relhom/quiveralg/representation.hpp"

namespace relhom {

/// ... -> P_1 -> P_0 -> M with P_k = (+)_g A e_{types[k][g]} over the algebra's
/// idempotents.  images[k][g][l] is the A e_{types[k-1][l]}-component (an element
/// of A) of the image of the g-th generator of P_k; images[0][g][0] lies in M.
template <ExactField F>
struct FreeResolution {
    using Vec = std::vector<typename F::value_type>;
    AbstractModule<F> target;
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::vector<std::vector<Vec>>> images;
    bool truncated = false;

    [[nodiscard]] std::size_t length() const { return types.empty() ? 0 : types.size() - 1; }
    [[nodiscard]] std::size_t rank(std::size_t k) const { return k < types.size() ? types[k].size() : 0; }
};

namespace detail {

template <ExactField F>
Matrix<F> right_of(const AbstractAlgebra<F>& a, const std::vector<typename F::value_type>& x) {
    Matrix<F> m(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (!x[i].is_zero()) m += x[i] * a.right(i);
    return m;
}

/// A e as a submodule of the regular module, with its basis in A-coordinates.
template <ExactField F>
std::pair<AbstractModule<F>, Matrix<F>> projective_at(const AbstractAlgebraPtr<F>& alg, std::size_t i) {
    auto basis = column_space(right_of(*alg, alg->idempotents()[i]));
    return abstract_submodule(AbstractModule<F>::regular(alg), basis);
}

/// Generators of M modulo rad(A)·M, one family per idempotent: (type, vector).
template <ExactField F>
std::vector<std::pair<std::size_t, std::vector<typename F::value_type>>> top_generators(const AbstractModule<F>& m) {
    const auto& alg = m.algebra();
    auto rad = m.radical_part();
    std::vector<std::pair<std::size_t, std::vector<typename F::value_type>>> out;
    for (std::size_t i = 0; i < alg.idempotents().size(); ++i) {
        auto e = m.act(alg.idempotents()[i]);
        auto erad = e * rad;
        auto span = column_space(e);
        auto piv = independent_columns(hstack(erad, span));
        for (auto p : piv)
            if (p >= erad.cols()) out.emplace_back(i, span.column(p - erad.cols()).flatten());
    }
    return out;
}

}  // namespace detail

/// Minimal projective resolution: covers are lifted from M / rad M one idempotent at
/// a time.  With `redundant`, every generator is used twice (a non-minimal resolution).
template <ExactField F>
FreeResolution<F> free_resolution(const AbstractModule<F>& m, std::size_t maxlen, bool redundant = false) {
    using Vec = std::vector<typename F::value_type>;
    FreeResolution<F> res;
    res.target = m;
    const auto& alg = m.algebra_ptr();
    const auto& field = m.field();
    std::vector<std::pair<AbstractModule<F>, Matrix<F>>> proj;
    for (std::size_t i = 0; i < alg->idempotents().size(); ++i) proj.push_back(detail::projective_at(alg, i));

    AbstractModule<F> current = m;
    Matrix<F> embed = Matrix<F>::identity(field, m.dim());  // current -> previous term
    std::vector<std::size_t> prev_types;
    for (std::size_t k = 0;; ++k) {
        if (current.is_zero()) break;
        auto gens = detail::top_generators(current);
        if (redundant) {
            auto copy = gens;
            gens.insert(gens.end(), copy.begin(), copy.end());
        }
        std::vector<std::size_t> types;
        std::vector<std::vector<Vec>> images;
        for (const auto& [t, v] : gens) {
            types.push_back(t);
            auto full = (embed * Matrix<F>(field, current.dim(), 1, v)).flatten();
            if (k == 0) {
                images.push_back({full});
                continue;
            }
            std::vector<Vec> comps;
            std::size_t off = 0;
            for (auto pt : prev_types) {
                const auto& basis = proj[pt].second;
                Matrix<F> c(field, basis.cols(), 1, Vec(full.begin() + static_cast<std::ptrdiff_t>(off),
                                                        full.begin() + static_cast<std::ptrdiff_t>(off + basis.cols())));
                comps.push_back((basis * c).flatten());
                off += basis.cols();
            }
            images.push_back(std::move(comps));
        }
        // P_k -> current: the j-th basis element b of A e_t goes to b · v
        std::vector<AbstractModule<F>> parts;
        std::size_t width = 0;
        for (auto t : types) width += proj[t].second.cols();
        Matrix<F> cover(field, current.dim(), width);
        std::size_t col = 0;
        for (const auto& [t, v] : gens) {
            const auto& basis = proj[t].second;
            Matrix<F> vm(field, current.dim(), 1, v);
            for (std::size_t j = 0; j < basis.cols(); ++j, ++col) cover.set_block(0, col, current.act(basis.column(j).flatten()) * vm);
            parts.push_back(proj[t].first);
        }
        res.types.push_back(types);
        res.images.push_back(std::move(images));
        auto ker = kernel_basis(cover);
        if (ker.cols() == 0) break;
        if (k == maxlen) {
            res.truncated = true;
            break;
        }
        auto p = direct_sum(alg, parts).sum;
        current = abstract_submodule(p, ker).first;
        embed = ker;
        prev_types = std::move(types);
    }
    return res;
}

/// Hom(P_k, N) -> Hom(P_{k+1}, N), with Hom(A e, N) = e N in a fixed basis.
template <ExactField F>
Matrix<F> dual_differential(const FreeResolution<F>& res, const AbstractModule<F>& n, std::size_t k,
                            const std::vector<Matrix<F>>& en) {
    auto dims = [&](std::size_t level) {
        std::size_t t = 0;
        if (level < res.types.size())
            for (auto ty : res.types[level]) t += en[ty].cols();
        return t;
    };
    Matrix<F> out(n.field(), dims(k + 1), dims(k));
    if (out.rows() == 0 || out.cols() == 0) return out;
    std::size_t row = 0;
    for (std::size_t g = 0; g < res.types[k + 1].size(); ++g) {
        const auto& ej = en[res.types[k + 1][g]];
        std::size_t col = 0;
        for (std::size_t l = 0; l < res.types[k].size(); ++l) {
            const auto& ei = en[res.types[k][l]];
            auto image = n.act(res.images[k + 1][g][l]) * ei;
            auto c = solve(ej, image);
            if (!c) throw std::logic_error("resolution component does not respect the idempotents");
            out.set_block(row, col, *c);
            col += ei.cols();
        }
        row += ej.cols();
    }
    return out;
}

template <ExactField F>
std::size_t ext_from_free_resolution(const FreeResolution<F>& res, const AbstractModule<F>& n, std::size_t i) {
    if (res.truncated && i + 1 >= res.types.size())
        throw undeterminable_error("resolution truncated before degree " + std::to_string(i + 1));
    if (i >= res.types.size()) return 0;
    std::vector<Matrix<F>> en;
    for (const auto& e : n.algebra().idempotents()) en.push_back(column_space(n.act(e)));
    std::size_t total = 0;
    for (auto t : res.types[i]) total += en[t].cols();
    if (total == 0) return 0;
    auto out = rank(dual_differential(res, n, i, en));
    std::size_t in = i > 0 ? rank(dual_differential(res, n, i - 1, en)) : 0;
    return total - out - in;
}

template <ExactField F>
std::size_t ext_dim(const AbstractModule<F>& m, const AbstractModule<F>& n, std::size_t i) {
    return ext_from_free_resolution(free_resolution(m, i + 1), n, i);
}

/// max{n ≤ cutoff : Ext^n(M, A / rad A) ≠ 0}; "≥ cutoff" when it persists at the cutoff.
template <ExactField F>
DimValue abstract_pd(const AbstractModule<F>& m, std::size_t cutoff) {
    if (cutoff == 0) throw std::invalid_argument("cutoff must be positive");
    if (m.is_zero()) return DimValue::exact(0);
    auto res = free_resolution(m, cutoff - 1);
    if (res.truncated) return DimValue::at_least(cutoff);
    auto top = top_of_algebra(m.algebra_ptr());
    for (std::size_t n = res.length() + 1; n-- > 0;)
        if (ext_from_free_resolution(res, top, n) != 0) return DimValue::exact(n);
    return DimValue::exact(0);
}

template <ExactField F>
DimensionReport abstract_gldim(const AbstractAlgebraPtr<F>& alg, std::size_t cutoff) {
    DimensionReport r{"gldim", abstract_pd(top_of_algebra(alg), cutoff), cutoff, {}, "pd of A / rad A"};
    return r;
}

/// id M = pd of D M over the opposite algebra.
template <ExactField F>
DimValue abstract_injdim(const AbstractModule<F>& m, const AbstractAlgebraPtr<F>& opp, std::size_t cutoff) {
    return abstract_pd(m.dual(opp), cutoff);
}

template <ExactField F>
struct GorensteinReport {
    DimValue left;   // id of A as a left module
    DimValue right;  // id of A as a right module
    [[nodiscard]] bool gorenstein() const { return !left.censored() && !right.censored(); }
};

template <ExactField F>
GorensteinReport<F> abstract_gorenstein(const AbstractAlgebraPtr<F>& alg, std::size_t cutoff) {
    auto opp = alg->opposite();
    auto left = abstract_injdim(AbstractModule<F>::regular(alg), opp, cutoff);
    auto right = abstract_injdim(AbstractModule<F>::right_regular(alg, opp), alg, cutoff);
    return {left, right};
}

template <ExactField F>
struct NamedAbstractModule {
    std::string name;
    AbstractModule<F> module;
};

/// Largest finite pd over the supplied modules: a lower bound for fd.
template <ExactField F>
DimensionReport abstract_findim(const std::vector<NamedAbstractModule<F>>& family, std::size_t cutoff) {
    DimensionReport r{"fd", DimValue::exact(0), cutoff, {}, "maximum over the supplied modules of finite pd; a lower bound"};
    for (const auto& m : family) {
        auto v = abstract_pd(m.module, cutoff);
        r.breakdown.emplace_back(m.name, v);
        if (!v.censored()) r.value.value = std::max(r.value.value, v.value);
    }
    return r;
}

/// The algebra whose left modules are the representations: e_p e_q is the path q then p.
template <ExactField F>
AbstractAlgebraPtr<F> as_abstract_algebra(const AlgebraPtr<F>& alg) {
    const auto d = alg->dimension();
    const auto& field = alg->field();
    std::vector<std::vector<std::vector<typename F::value_type>>> prod(d, std::vector<std::vector<typename F::value_type>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<typename F::value_type> v(d, field.zero());
            for (const auto& [k, c] : alg->multiply(j, i)) v[k] += c;
            prod[i][j] = std::move(v);
        }
    std::vector<typename F::value_type> unit(d, field.zero());
    std::vector<std::vector<typename F::value_type>> rad;
    for (std::size_t i = 0; i < d; ++i) {
        if (alg->basis_path(i).length() == 0) {
            unit[i] = field.one();
            continue;
        }
        std::vector<typename F::value_type> v(d, field.zero());
        v[i] = field.one();
        rad.push_back(std::move(v));
    }
    std::vector<std::vector<typename F::value_type>> idem;
    for (std::size_t v = 0; v < alg->vertex_count(); ++v) {
        std::vector<typename F::value_type> e(d, field.zero());
        e[alg->paths_between(v, v)[alg->trivial_path(v)]] = field.one();
        idem.push_back(std::move(e));
    }
    return AbstractAlgebra<F>::make(field, prod, unit, from_columns(field, d, rad), std::move(idem));
}

template <ExactField F>
AbstractModule<F> as_abstract_module(const Representation<F>& m, const AbstractAlgebraPtr<F>& a) {
    const auto& alg = m.algebra();
    std::vector<std::size_t> off(m.vertex_count() + 1, 0);
    for (std::size_t v = 0; v < m.vertex_count(); ++v) off[v + 1] = off[v] + m.dim(v);
    const auto total = off.back();
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        const auto& p = alg.basis_path(i);
        Matrix<F> x(m.field(), total, total);
        auto s = p.start, t = alg.end_vertex(p);
        if (m.dim(s) > 0 && m.dim(t) > 0) x.set_block(off[t], off[s], m.path_action(p));
        act.push_back(std::move(x));
    }
    return AbstractModule<F>(a, total, std::move(act));
}

}  // namespace relhom

#pragma once

// The classical module-category toolkit over a path algebra: Hom spaces,
// kernels and cokernels, radicals and socles, indecomposable projectives,
// injectives and simples, projective covers and presentations, the
// transpose / dual / DTr, and an isomorphism test.

#include "relhom/quiveralg/representation.hpp"

#include <optional>
#include <random>

namespace relhom {

// ---------------------------------------------------------------------------
// Hom spaces

template <ExactField F>
struct HomSpace {
    using value_type = typename F::value_type;

    Representation<F> source;
    Representation<F> target;
    std::vector<ModuleMap<F>> basis;
    Matrix<F> flat;  // column k = basis[k].flatten()

    [[nodiscard]] std::size_t dim() const { return basis.size(); }

    [[nodiscard]] ModuleMap<F> combine(std::span<const value_type> coeffs) const {
        auto m = ModuleMap<F>::zero(source, target);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!coeffs[k].is_zero()) m = m + coeffs[k] * basis[k];
        return m;
    }

    /// Coordinates of a homomorphism in this basis.
    [[nodiscard]] std::vector<value_type> coordinates(const ModuleMap<F>& m) const {
        auto v = m.flatten();
        Matrix<F> col(source.field(), v.size(), 1, v);
        auto sol = solve(flat, col);
        if (!sol) throw std::invalid_argument("map is not a homomorphism between these modules");
        std::vector<value_type> out;
        for (std::size_t k = 0; k < basis.size(); ++k) out.push_back((*sol)(k, 0));
        return out;
    }
};

/// Basis of Hom(M, N): the solution space of N_a f_i = f_j M_a over all arrows a: i -> j.
template <ExactField F>
HomSpace<F> hom_space(const Representation<F>& m, const Representation<F>& n) {
    if (!m.same_algebra_as(n)) throw std::invalid_argument("hom_space: modules over different algebras");
    const auto& field = m.field();
    const auto& q = m.algebra().quiver();
    const auto nv = q.vertex_count();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dim(v) * m.dim(v);
    const auto unknowns = off[nv];

    std::size_t eqs = 0;
    for (const auto& a : q.arrows()) eqs += n.dim(a.target) * m.dim(a.source);
    Matrix<F> sys(field, eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
        const auto& a = q.arrow(ai);
        const auto i = a.source, j = a.target;
        const auto& na = n.arrow_map(ai);  // d_j(N) x d_i(N)
        const auto& ma = m.arrow_map(ai);  // d_j(M) x d_i(M)
        for (std::size_t c = 0; c < m.dim(i); ++c)
            for (std::size_t r = 0; r < n.dim(j); ++r) {
                for (std::size_t k = 0; k < n.dim(i); ++k)
                    if (!na(r, k).is_zero()) sys(row, off[i] + c * n.dim(i) + k) += na(r, k);
                for (std::size_t k = 0; k < m.dim(j); ++k)
                    if (!ma(k, c).is_zero()) sys(row, off[j] + k * n.dim(j) + r) -= ma(k, c);
                ++row;
            }
    }
    auto ker = kernel_basis(sys);
    HomSpace<F> h{m, n, {}, ker};
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        auto col = ker.column(k).flatten();
        h.basis.push_back(ModuleMap<F>::unflatten(m, n, col));
    }
    return h;
}

// ---------------------------------------------------------------------------
// Deterministic random coefficients for the randomized searches.

template <ExactField F>
class CoefficientSampler {
public:
    explicit CoefficientSampler(F field, std::uint64_t seed = 0x7e1a71e5eedULL) : field_(std::move(field)), rng_(seed) {}

    typename F::value_type next() {
        if (field_.size() == 0) {
            std::uniform_int_distribution<int> d(-7, 7);
            return field_.from_int(d(rng_));
        }
        std::uniform_int_distribution<std::uint64_t> d(0, field_.size() - 1);
        return field_.from_int(static_cast<std::int64_t>(d(rng_)));
    }

    std::vector<typename F::value_type> vector(std::size_t n) {
        std::vector<typename F::value_type> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(next());
        return v;
    }

private:
    F field_;
    std::mt19937_64 rng_;
};

inline constexpr int kRandomAttempts = 64;
inline constexpr std::uint64_t kExhaustiveLimit = 1u << 16;

// ---------------------------------------------------------------------------
// Sub- and quotient modules

template <ExactField F>
struct SubmoduleResult {
    Representation<F> module;
    ModuleMap<F> inclusion;  // module -> ambient
};

template <ExactField F>
struct QuotientResult {
    Representation<F> module;
    ModuleMap<F> projection;  // ambient -> module
};

/// Submodule with the given vertexwise bases (columns, independent, invariant).
template <ExactField F>
SubmoduleResult<F> submodule(const Representation<F>& m, const std::vector<Matrix<F>>& bases) {
    const auto& q = m.algebra().quiver();
    std::vector<Matrix<F>> lefts;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        lefts.push_back(left_inverse(bases[v]));
        dims.push_back(bases[v].cols());
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        auto image = m.arrow_map(a) * bases[arr.source];
        auto restricted = lefts[arr.target] * image;
        if (!(bases[arr.target] * restricted == image)) throw std::invalid_argument("subspace is not a submodule");
        maps.push_back(std::move(restricted));
    }
    Representation<F> sub(m.algebra_ptr(), std::move(dims), std::move(maps), typename Representation<F>::unchecked{});
    ModuleMap<F> inc(sub, m, bases, false);
    return {std::move(sub), std::move(inc)};
}

/// Quotient of m by the submodule with vertexwise bases `sub`.
template <ExactField F>
QuotientResult<F> quotient(const Representation<F>& m, const std::vector<Matrix<F>>& sub) {
    const auto& q = m.algebra().quiver();
    std::vector<Quotient<F>> qs;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        qs.push_back(quotient_by(m.field(), m.dim(v), sub[v]));
        dims.push_back(qs.back().dim());
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        maps.push_back(qs[arr.target].projection * m.arrow_map(a) * qs[arr.source].section);
    }
    Representation<F> quo(m.algebra_ptr(), std::move(dims), std::move(maps), typename Representation<F>::unchecked{});
    std::vector<Matrix<F>> proj;
    for (auto& x : qs) proj.push_back(std::move(x.projection));
    ModuleMap<F> p(m, quo, std::move(proj), false);
    return {std::move(quo), std::move(p)};
}

template <ExactField F>
SubmoduleResult<F> kernel(const ModuleMap<F>& f) {
    std::vector<Matrix<F>> bases;
    for (const auto& c : f.components()) bases.push_back(kernel_basis(c));
    return submodule(f.source(), bases);
}

template <ExactField F>
SubmoduleResult<F> image(const ModuleMap<F>& f) {
    std::vector<Matrix<F>> bases;
    for (const auto& c : f.components()) bases.push_back(column_space(c));
    return submodule(f.target(), bases);
}

template <ExactField F>
QuotientResult<F> cokernel(const ModuleMap<F>& f) {
    std::vector<Matrix<F>> bases;
    for (const auto& c : f.components()) bases.push_back(column_space(c));
    return quotient(f.target(), bases);
}

/// The map Q -> T induced by m: M -> T on a quotient p: M -> Q, where m kills ker p.
template <ExactField F>
ModuleMap<F> induced_from_quotient(const ModuleMap<F>& p, const ModuleMap<F>& m) {
    std::vector<Matrix<F>> comps;
    for (std::size_t v = 0; v < p.source().vertex_count(); ++v) {
        auto right = left_inverse(p.component(v).transpose()).transpose();
        comps.push_back(m.component(v) * right);
    }
    ModuleMap<F> h(p.target(), m.target(), std::move(comps), false);
    if (!(h * p == m)) throw std::invalid_argument("map does not factor through the quotient");
    return h;
}

/// The map S -> K induced by m: S -> M into a submodule i: K -> M containing its image.
template <ExactField F>
ModuleMap<F> induced_into_submodule(const ModuleMap<F>& i, const ModuleMap<F>& m) {
    std::vector<Matrix<F>> comps;
    for (std::size_t v = 0; v < i.source().vertex_count(); ++v)
        comps.push_back(left_inverse(i.component(v)) * m.component(v));
    ModuleMap<F> h(m.source(), i.source(), std::move(comps), false);
    if (!(i * h == m)) throw std::invalid_argument("map does not factor through the submodule");
    return h;
}

// ---------------------------------------------------------------------------
// Direct sums

template <ExactField F>
struct DirectSum {
    Representation<F> sum;
    std::vector<ModuleMap<F>> injections;
    std::vector<ModuleMap<F>> projections;
    /// offsets[k][v]: first coordinate of summand k at vertex v.
    std::vector<std::vector<std::size_t>> offsets;
};

template <ExactField F>
DirectSum<F> direct_sum(const AlgebraPtr<F>& alg, const std::vector<Representation<F>>& parts) {
    const auto& q = alg->quiver();
    const auto nv = q.vertex_count();
    const auto& field = alg->field();
    std::vector<std::size_t> dims(nv, 0);
    std::vector<std::vector<std::size_t>> offsets;
    for (const auto& p : parts) {
        if (!same_algebra(*alg, p.algebra())) throw std::invalid_argument("direct_sum: modules over different algebras");
        offsets.push_back(dims);
        for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        Matrix<F> m(field, dims[arr.target], dims[arr.source]);
        for (std::size_t k = 0; k < parts.size(); ++k)
            m.set_block(offsets[k][arr.target], offsets[k][arr.source], parts[k].arrow_map(a));
        maps.push_back(std::move(m));
    }
    Representation<F> sum(alg, dims, std::move(maps), typename Representation<F>::unchecked{});
    DirectSum<F> ds{sum, {}, {}, offsets};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<Matrix<F>> inj, proj;
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix<F> i(field, dims[v], parts[k].dim(v));
            Matrix<F> p(field, parts[k].dim(v), dims[v]);
            for (std::size_t r = 0; r < parts[k].dim(v); ++r) {
                i(offsets[k][v] + r, r) = field.one();
                p(r, offsets[k][v] + r) = field.one();
            }
            inj.push_back(std::move(i));
            proj.push_back(std::move(p));
        }
        ds.injections.emplace_back(parts[k], sum, std::move(inj), false);
        ds.projections.emplace_back(sum, parts[k], std::move(proj), false);
    }
    return ds;
}

/// The map  (+)_k A_k -> T  with components maps[k]: A_k -> T.
template <ExactField F>
ModuleMap<F> map_from_sum(const DirectSum<F>& src, const std::vector<ModuleMap<F>>& maps, const Representation<F>& target) {
    auto total = ModuleMap<F>::zero(src.sum, target);
    for (std::size_t k = 0; k < maps.size(); ++k) total = total + maps[k] * src.projections[k];
    return total;
}

/// The map  S -> (+)_k B_k  with components maps[k]: S -> B_k.
template <ExactField F>
ModuleMap<F> map_into_sum(const DirectSum<F>& tgt, const std::vector<ModuleMap<F>>& maps, const Representation<F>& source) {
    auto total = ModuleMap<F>::zero(source, tgt.sum);
    for (std::size_t k = 0; k < maps.size(); ++k) total = total + tgt.injections[k] * maps[k];
    return total;
}

template <ExactField F>
struct Pushout {
    Representation<F> module;
    ModuleMap<F> from_first;   // A' -> P
    ModuleMap<F> from_second;  // B -> P
    DirectSum<F> sum;          // A' (+) B
    ModuleMap<F> projection;   // A' (+) B -> P
};

/// Pushout of u: A -> A' and f: A -> B.
template <ExactField F>
Pushout<F> pushout(const ModuleMap<F>& u, const ModuleMap<F>& f) {
    auto ds = direct_sum(u.source().algebra_ptr(), {u.target(), f.target()});
    auto q = cokernel(map_into_sum(ds, {u, -f}, u.source()));
    auto a = q.projection * ds.injections[0];
    auto b = q.projection * ds.injections[1];
    return {q.module, std::move(a), std::move(b), std::move(ds), std::move(q.projection)};
}

// ---------------------------------------------------------------------------
// Radical, top, socle

template <ExactField F>
SubmoduleResult<F> radical(const Representation<F>& m) {
    const auto& q = m.algebra().quiver();
    std::vector<Matrix<F>> bases;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        Matrix<F> span(m.field(), m.dim(v), 0);
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            if (q.arrow(a).target == v) span = hstack(span, m.arrow_map(a));
        bases.push_back(column_space(span));
    }
    return submodule(m, bases);
}

template <ExactField F>
QuotientResult<F> top(const Representation<F>& m) {
    return quotient(m, radical(m).inclusion.components());
}

template <ExactField F>
SubmoduleResult<F> socle(const Representation<F>& m) {
    const auto& q = m.algebra().quiver();
    std::vector<Matrix<F>> bases;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        Matrix<F> stack(m.field(), 0, m.dim(v));
        for (std::size_t a = 0; a < q.arrows().size(); ++a)
            if (q.arrow(a).source == v) stack = vstack(stack, m.arrow_map(a));
        bases.push_back(kernel_basis(stack));
    }
    return submodule(m, bases);
}

/// M / soc M.
template <ExactField F>
Representation<F> quotient_by_socle(const Representation<F>& m) {
    return quotient(m, socle(m).inclusion.components()).module;
}

// ---------------------------------------------------------------------------
// Projectives, injectives, simples

/// P_i: the vertex-m space has basis the basis paths from i to m; arrows act by
/// appending.
template <ExactField F>
Representation<F> projective(const AlgebraPtr<F>& alg, std::size_t i) {
    const auto nv = alg->vertex_count();
    if (i >= nv) throw std::out_of_range("vertex out of range");
    const auto& q = alg->quiver();
    std::vector<std::size_t> pos(alg->dimension(), 0);
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& ps = alg->paths_between(i, v);
        dims[v] = ps.size();
        for (std::size_t k = 0; k < ps.size(); ++k) pos[ps[k]] = k;
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        Matrix<F> m(alg->field(), dims[arr.target], dims[arr.source]);
        const auto& from = alg->paths_between(i, arr.source);
        for (std::size_t c = 0; c < from.size(); ++c) {
            Path p = alg->basis_path(from[c]);
            p.arrows.push_back(a);
            for (const auto& [b, coeff] : alg->normal_form(p)) m(pos[b], c) += coeff;
        }
        maps.push_back(std::move(m));
    }
    return Representation<F>(alg, std::move(dims), std::move(maps), typename Representation<F>::unchecked{});
}

/// I_i: the vertex-m space is dual to the basis paths from m to i;
/// (X_a phi)(q) = phi(a q).
template <ExactField F>
Representation<F> injective(const AlgebraPtr<F>& alg, std::size_t i) {
    const auto nv = alg->vertex_count();
    if (i >= nv) throw std::out_of_range("vertex out of range");
    const auto& q = alg->quiver();
    std::vector<std::size_t> pos(alg->dimension(), 0);
    std::vector<std::size_t> dims(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& ps = alg->paths_between(v, i);
        dims[v] = ps.size();
        for (std::size_t k = 0; k < ps.size(); ++k) pos[ps[k]] = k;
    }
    std::vector<Matrix<F>> maps;
    for (std::size_t a = 0; a < q.arrows().size(); ++a) {
        const auto& arr = q.arrow(a);
        Matrix<F> m(alg->field(), dims[arr.target], dims[arr.source]);
        const auto& to = alg->paths_between(arr.target, i);
        for (std::size_t r = 0; r < to.size(); ++r) {
            Path p{arr.source, {a}};
            const auto& tail = alg->basis_path(to[r]).arrows;
            p.arrows.insert(p.arrows.end(), tail.begin(), tail.end());
            for (const auto& [b, coeff] : alg->normal_form(p)) m(r, pos[b]) += coeff;
        }
        maps.push_back(std::move(m));
    }
    return Representation<F>(alg, std::move(dims), std::move(maps), typename Representation<F>::unchecked{});
}

template <ExactField F>
Representation<F> simple(const AlgebraPtr<F>& alg, std::size_t i) {
    const auto nv = alg->vertex_count();
    if (i >= nv) throw std::out_of_range("vertex out of range");
    std::vector<std::size_t> dims(nv, 0);
    dims[i] = 1;
    std::vector<Matrix<F>> maps;
    for (const auto& a : alg->quiver().arrows()) maps.emplace_back(alg->field(), dims[a.target], dims[a.source]);
    return Representation<F>(alg, std::move(dims), std::move(maps), typename Representation<F>::unchecked{});
}

/// The map P_i -> M sending the trivial path e_i to the vector `elem` in M_i.
template <ExactField F>
ModuleMap<F> map_from_projective(const Representation<F>& m, std::size_t i, const Matrix<F>& elem) {
    const auto& alg = m.algebra_ptr();
    auto p = projective(alg, i);
    std::vector<Matrix<F>> comps;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        const auto& ps = alg->paths_between(i, v);
        Matrix<F> c(m.field(), m.dim(v), ps.size());
        for (std::size_t k = 0; k < ps.size(); ++k) c.set_block(0, k, m.path_action(alg->basis_path(ps[k])) * elem);
        comps.push_back(std::move(c));
    }
    return ModuleMap<F>(p, m, std::move(comps), false);
}

// ---------------------------------------------------------------------------
// Projective covers and presentations

template <ExactField F>
struct ProjectiveCover {
    ModuleMap<F> map;                   // P -> M
    std::vector<std::size_t> vertices;  // P = (+) projective(vertices[k])
    DirectSum<F> summands;
};

template <ExactField F>
ProjectiveCover<F> projective_cover(const Representation<F>& m) {
    const auto& alg = m.algebra_ptr();
    auto rad = radical(m);
    std::vector<std::size_t> vertices;
    std::vector<Representation<F>> parts;
    std::vector<ModuleMap<F>> maps;
    for (std::size_t v = 0; v < m.vertex_count(); ++v) {
        auto q = quotient_by(m.field(), m.dim(v), rad.inclusion.component(v));
        for (std::size_t k = 0; k < q.section.cols(); ++k) {
            vertices.push_back(v);
            maps.push_back(map_from_projective(m, v, q.section.column(k)));
            parts.push_back(maps.back().source());
        }
    }
    auto ds = direct_sum(alg, parts);
    auto cover = map_from_sum(ds, maps, m);
    return {std::move(cover), std::move(vertices), std::move(ds)};
}

/// Minimality certificate: the kernel of a cover lies in the radical of its source.
template <ExactField F>
bool kernel_in_radical(const ModuleMap<F>& f) {
    auto ker = kernel(f);
    auto rad = radical(f.source());
    for (std::size_t v = 0; v < f.source().vertex_count(); ++v)
        if (!in_span(rad.inclusion.component(v), ker.inclusion.component(v))) return false;
    return true;
}

template <ExactField F>
struct Presentation {
    ProjectiveCover<F> p0;  // P0 -> M
    ProjectiveCover<F> p1;  // P1 -> kernel of p0
    ModuleMap<F> d;         // P1 -> P0
};

template <ExactField F>
Presentation<F> minimal_presentation(const Representation<F>& m) {
    auto p0 = projective_cover(m);
    auto ker = kernel(p0.map);
    auto p1 = projective_cover(ker.module);
    auto d = ker.inclusion * p1.map;
    return {std::move(p0), std::move(p1), std::move(d)};
}

/// The element of P_{target vertex} that the summand-generator e_{i_s} maps to,
/// restricted to summand t of the target sum: coordinates in paths_between(j_t, i_s).
template <ExactField F>
Matrix<F> generator_image(const ModuleMap<F>& d, const ProjectiveCover<F>& src, std::size_t s,
                          const ProjectiveCover<F>& tgt, std::size_t t) {
    const auto& alg = d.source().algebra();
    const auto i = src.vertices[s];
    const auto j = tgt.vertices[t];
    auto col = src.summands.offsets[s][i] + alg.trivial_path(i);
    auto n = alg.paths_between(j, i).size();
    return d.component(i).block(tgt.summands.offsets[t][i], col, n, 1);
}

// ---------------------------------------------------------------------------
// Duality, transpose and the Auslander-Reiten translate

/// Vector-space dual: a module over the opposite algebra `opp` (arrows reversed).
template <ExactField F>
Representation<F> dual(const Representation<F>& m, const AlgebraPtr<F>& opp) {
    if (!(opp->quiver() == m.algebra().quiver().opposite()))
        throw std::invalid_argument("dual: target algebra is not the opposite algebra");
    std::vector<Matrix<F>> maps;
    for (const auto& x : m.arrow_maps()) maps.push_back(x.transpose());
    return Representation<F>(opp, m.dims(), std::move(maps), typename Representation<F>::unchecked{});
}

template <ExactField F>
Representation<F> dual(const Representation<F>& m) {
    return dual(m, m.algebra().opposite());
}

/// Dual of a map f: A -> B, the map DB -> DA over `opp`.
template <ExactField F>
ModuleMap<F> dual(const ModuleMap<F>& f, const AlgebraPtr<F>& opp) {
    std::vector<Matrix<F>> comps;
    for (const auto& c : f.components()) comps.push_back(c.transpose());
    return ModuleMap<F>(dual(f.target(), opp), dual(f.source(), opp), std::move(comps), false);
}

/// Tr M = coker( Hom(P0, L) -> Hom(P1, L) ) over the opposite algebra `opp`,
/// from the minimal presentation P1 -> P0 -> M.
template <ExactField F>
Representation<F> transpose(const Representation<F>& m, const AlgebraPtr<F>& opp) {
    const auto& alg = m.algebra();
    auto pres = minimal_presentation(m);
    const auto& vs1 = pres.p1.vertices;
    const auto& vs0 = pres.p0.vertices;

    std::vector<Representation<F>> hom1, hom0;
    for (auto i : vs1) hom1.push_back(projective(opp, i));
    for (auto j : vs0) hom0.push_back(projective(opp, j));
    auto sum1 = direct_sum(opp, hom1);
    auto sum0 = direct_sum(opp, hom0);

    // Component t -> s is right multiplication by w_ts, i.e. the opposite-algebra
    // map P^op_{j_t} -> P^op_{i_s} sending e_{j_t} to rev(w_ts).
    std::vector<ModuleMap<F>> cols;
    for (std::size_t t = 0; t < vs0.size(); ++t) {
        std::vector<ModuleMap<F>> rows;
        for (std::size_t s = 0; s < vs1.size(); ++s) {
            const auto i = vs1[s], j = vs0[t];
            auto w = generator_image(pres.d, pres.p1, s, pres.p0, t);
            const auto& ps = alg.paths_between(j, i);
            const auto& ops = opp->paths_between(i, j);
            Matrix<F> elem(m.field(), ops.size(), 1);
            std::vector<std::size_t> pos(opp->dimension(), 0);
            for (std::size_t k = 0; k < ops.size(); ++k) pos[ops[k]] = k;
            for (std::size_t k = 0; k < ps.size(); ++k) {
                if (w(k, 0).is_zero()) continue;
                for (const auto& [b, c] : opp->normal_form(alg.reverse(alg.basis_path(ps[k]))))
                    elem(pos[b], 0) += w(k, 0) * c;
            }
            rows.push_back(map_from_projective(hom1[s], j, elem));
        }
        cols.push_back(map_into_sum(sum1, rows, hom0[t]));
    }
    auto dual_map = vs0.empty() ? ModuleMap<F>::zero(sum0.sum, sum1.sum) : map_from_sum(sum0, cols, sum1.sum);
    return cokernel(dual_map).module;
}

template <ExactField F>
Representation<F> transpose(const Representation<F>& m) {
    return transpose(m, m.algebra().opposite());
}

/// DTr M.  Projective summands contribute nothing since the presentation is minimal.
template <ExactField F>
Representation<F> dtr(const Representation<F>& m) {
    auto opp = m.algebra().opposite();
    return dual(transpose(m, opp), m.algebra_ptr());
}

// ---------------------------------------------------------------------------
// Isomorphism and indecomposability

enum class Verdict { yes, no, unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

template <ExactField F>
struct IsoResult {
    Verdict verdict = Verdict::no;
    std::optional<ModuleMap<F>> witness;
    explicit operator bool() const { return verdict == Verdict::yes; }
};

/// Seeks an invertible element of Hom(M, N): basis elements first, then every
/// element when Hom is finite and small, else seeded random combinations.
/// Over a prime field with fewer than 64 elements a failed random search is
/// reported as unknown.
template <ExactField F>
IsoResult<F> is_isomorphic(const Representation<F>& m, const Representation<F>& n) {
    if (m.dims() != n.dims()) return {Verdict::no, std::nullopt};
    if (m.is_zero()) return {Verdict::yes, ModuleMap<F>::zero(m, n)};
    auto h = hom_space(m, n);
    if (h.dim() == 0) return {Verdict::no, std::nullopt};
    for (const auto& b : h.basis)
        if (b.is_isomorphism()) return {Verdict::yes, b};
    const auto size = m.field().size();
    if (size != 0) {
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < h.dim() && total <= kExhaustiveLimit; ++k) total *= size;
        if (total <= kExhaustiveLimit) {
            std::vector<typename F::value_type> c(h.dim(), m.field().zero());
            for (std::uint64_t n = 1; n < total; ++n) {
                auto r = n;
                for (auto& x : c) {
                    x = m.field().from_int(static_cast<std::int64_t>(r % size));
                    r /= size;
                }
                auto f = h.combine(c);
                if (f.is_isomorphism()) return {Verdict::yes, f};
            }
            return {Verdict::no, std::nullopt};
        }
    }
    CoefficientSampler<F> rng(m.field());
    for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
        auto f = h.combine(rng.vector(h.dim()));
        if (f.is_isomorphism()) return {Verdict::yes, f};
    }
    if (size != 0 && size < static_cast<std::uint64_t>(kRandomAttempts)) return {Verdict::unknown, std::nullopt};
    return {Verdict::no, std::nullopt};
}

template <ExactField F>
bool is_nilpotent(const ModuleMap<F>& f) {
    auto p = f;
    const auto n = f.source().total_dim();
    for (std::size_t k = 1; k < n; k *= 2) p = p * p;
    return p.is_zero();
}

template <ExactField F>
struct IndecomposabilityCheck {
    bool consistent = true;                // no splitting endomorphism was found
    std::optional<ModuleMap<F>> witness;   // endomorphism neither nilpotent nor invertible
};

/// A local endomorphism ring has every element nilpotent or invertible; an
/// element that is neither exhibits a nontrivial Fitting decomposition.
template <ExactField F>
IndecomposabilityCheck<F> check_indecomposable(const Representation<F>& m) {
    if (m.is_zero()) return {false, std::nullopt};
    auto h = hom_space(m, m);
    auto test = [](const ModuleMap<F>& f) { return f.is_isomorphism() || is_nilpotent(f); };
    for (const auto& b : h.basis)
        if (!test(b)) return {false, b};
    CoefficientSampler<F> rng(m.field(), 0xdec0de);
    for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
        auto f = h.combine(rng.vector(h.dim()));
        if (!test(f)) return {false, f};
    }
    return {true, std::nullopt};
}

}  // namespace relhom

#pragma once

// Complexes of Λ-modules relative to F: F-acyclicity, F-quasi-isomorphisms,
// F-projective replacement and derived Homs, radical normalization, triangles.

#include "relhom/complexcat/complex.hpp"
#include "relhom/relhom/resolution.hpp"

namespace relhom {

template <ExactField F>
using LComplex = Complex<LambdaModules<F>>;
template <ExactField F>
using LChainMap = ChainMap<LambdaModules<F>>;

/// A stalk complex for each module, with its add(G) blocks when known.
template <ExactField F>
LComplex<F> stalk(const Representation<F>& m, int degree = 0) {
    return LComplex<F>::stalk(m, degree);
}

/// H^* Hom(G_j, X•) = 0 for every summand G_j.
template <ExactField F>
bool is_f_acyclic(const LComplex<F>& x, const SubbifunctorF<F>& f) {
    if (x.empty()) return true;
    for (std::size_t j = 0; j < f.summand_count(); ++j) {
        const auto& g = f.summand(j);
        for (int i = x.lo(); i <= x.hi(); ++i) {
            auto h = hom_space(g, x.at(i));
            if (h.dim() == 0) continue;
            auto out = rank(pushforward_matrix(h, x.d(i)));
            auto in = rank(pushforward_matrix(hom_space(g, x.at(i - 1)), x.d(i - 1)));
            if (out + in != h.dim()) return false;
        }
    }
    return true;
}

/// Exact, and every 0 -> Im d^{i-1} -> X^i -> Im d^i -> 0 is F-exact.
template <ExactField F>
bool is_f_acyclic_definitional(const LComplex<F>& x, const SubbifunctorF<F>& f) {
    if (x.empty()) return true;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        auto in = kernel(x.d(i));
        auto im = image(x.d(i - 1));
        if (in.module.total_dim() != im.module.total_dim()) return false;
        auto out = image(x.d(i));
        auto corestriction = induced_into_submodule(out.inclusion, x.d(i));
        ShortExactSeq<F> ses{im.inclusion, corestriction};
        if (!is_f_exact(ses, f)) return false;
    }
    return true;
}

template <ExactField F>
bool is_f_quasi_iso(const LChainMap<F>& m, const SubbifunctorF<F>& f) {
    return is_f_acyclic(cone(m).complex, f);
}

template <ExactField F>
struct Replacement {
    LComplex<F> complex;   // terms in add G, degrees depth .. X.hi
    LChainMap<F> map;      // complex -> X
    int depth = 0;
};

/// P• -> X• with P^i in add G and cone F-acyclic in degrees > depth; P^i = 0 below depth.
template <ExactField F>
Replacement<F> f_projective_replacement(const LComplex<F>& x, const SubbifunctorF<F>& f, int depth) {
    const auto& alg = f.algebra_ptr();
    if (x.empty()) return {LComplex<F>::zero(alg), LChainMap<F>::zero(LComplex<F>::zero(alg), x), depth};
    depth = std::min(depth, x.lo());
    std::vector<Representation<F>> terms;          // from the top down
    std::vector<ModuleMap<F>> diffs;               // d^k: P^k -> P^{k+1}, top down
    std::vector<ModuleMap<F>> comps;               // φ^k
    std::vector<std::vector<Representation<F>>> blocks;
    Representation<F> above = Representation<F>::zero(alg);
    ModuleMap<F> d_above = ModuleMap<F>::zero(above, above);
    ModuleMap<F> phi_above = ModuleMap<F>::zero(above, x.at(x.hi() + 1));
    for (int k = x.hi(); k >= depth; --k) {
        auto z = kernel(d_above);
        auto ds = direct_sum(alg, {z.module, x.at(k)});
        auto w = kernel(phi_above * z.inclusion * ds.projections[0] + -(x.d(k) * ds.projections[1]));
        auto a = right_approximation(w.module, f);
        auto p = a.sum.sum;
        if (k < x.hi()) diffs.push_back(z.inclusion * ds.projections[0] * w.inclusion * a.map);
        auto phi = ds.projections[1] * w.inclusion * a.map;
        std::vector<Representation<F>> bl;
        for (auto j : a.parts) bl.push_back(f.summand(j));
        terms.push_back(p);
        comps.push_back(phi);
        blocks.push_back(std::move(bl));
        d_above = diffs.empty() ? ModuleMap<F>::zero(p, above) : diffs.back();
        above = p;
        phi_above = phi;
    }
    std::reverse(terms.begin(), terms.end());
    std::reverse(diffs.begin(), diffs.end());
    std::reverse(comps.begin(), comps.end());
    std::reverse(blocks.begin(), blocks.end());
    LComplex<F> p(alg, depth, std::move(terms), std::move(diffs), std::move(blocks));
    return {p, LChainMap<F>(p, x, std::move(comps)), depth};
}

/// Hom_{D_F}(X, Y[n]) computed as Hom_K(P_X, Y[n]) for a replacement deep enough
/// to be exact in every degree Y[n] can see.
template <ExactField F>
std::size_t hom_df(const LComplex<F>& x, const LComplex<F>& y, int n, const SubbifunctorF<F>& f,
                   std::size_t max_depth = 64) {
    if (x.is_zero() || y.is_zero()) return 0;
    const int depth = std::min(x.lo(), y.lo() - n - 1);
    if (x.hi() - depth > static_cast<int>(max_depth))
        throw undeterminable_error("replacement depth " + std::to_string(x.hi() - depth) + " exceeds the limit " +
                                   std::to_string(max_depth));
    auto r = f_projective_replacement(x, f, depth);
    return hom_k(r.complex, y, n).dim();
}

template <ExactField F>
ModuleMap<F> inverse_map(const ModuleMap<F>& m) {
    std::vector<Matrix<F>> comps;
    for (std::size_t v = 0; v < m.source().vertex_count(); ++v) comps.push_back(inverse(m.component(v)));
    return ModuleMap<F>(m.target(), m.source(), std::move(comps));
}

/// Gaussian elimination of iso components between blocks of adjacent degrees,
/// until every block component of every differential is non-invertible.
template <ExactField F>
LComplex<F> radical_normalize(const LComplex<F>& x) {
    if (x.empty()) return x;
    const auto& alg = x.context();
    const int lo = x.lo();
    std::vector<std::vector<Representation<F>>> blocks;
    std::vector<ModuleMap<F>> diffs;
    for (int i = lo; i <= x.hi(); ++i) blocks.push_back(x.blocks(i));
    for (int i = lo; i < x.hi(); ++i) diffs.push_back(x.d(i));

    auto sums = [&](std::size_t k) { return direct_sum(alg, blocks[k]); };
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t k = 0; k < diffs.size() && !changed; ++k) {
            auto s = sums(k), t = sums(k + 1);
            for (std::size_t b = 0; b < blocks[k].size() && !changed; ++b)
                for (std::size_t c = 0; c < blocks[k + 1].size() && !changed; ++c) {
                    if (blocks[k][b].dims() != blocks[k + 1][c].dims()) continue;
                    auto delta = t.projections[c] * diffs[k] * s.injections[b];
                    if (!delta.is_isomorphism()) continue;
                    std::vector<Representation<F>> rest_s, rest_t;
                    std::vector<std::size_t> keep_s, keep_t;
                    for (std::size_t q = 0; q < blocks[k].size(); ++q)
                        if (q != b) rest_s.push_back(blocks[k][q]), keep_s.push_back(q);
                    for (std::size_t q = 0; q < blocks[k + 1].size(); ++q)
                        if (q != c) rest_t.push_back(blocks[k + 1][q]), keep_t.push_back(q);
                    auto ns = direct_sum(alg, rest_s), nt = direct_sum(alg, rest_t);
                    auto in_s = ModuleMap<F>::zero(ns.sum, s.sum);   // X' -> X^k
                    auto pr_s = ModuleMap<F>::zero(s.sum, ns.sum);
                    for (std::size_t q = 0; q < keep_s.size(); ++q) {
                        in_s = in_s + s.injections[keep_s[q]] * ns.projections[q];
                        pr_s = pr_s + ns.injections[q] * s.projections[keep_s[q]];
                    }
                    auto in_t = ModuleMap<F>::zero(nt.sum, t.sum);
                    auto pr_t = ModuleMap<F>::zero(t.sum, nt.sum);
                    for (std::size_t q = 0; q < keep_t.size(); ++q) {
                        in_t = in_t + t.injections[keep_t[q]] * nt.projections[q];
                        pr_t = pr_t + nt.injections[q] * t.projections[keep_t[q]];
                    }
                    auto delta_inv = inverse_map(delta);
                    auto alpha = pr_t * diffs[k] * in_s;
                    auto beta = pr_t * diffs[k] * s.injections[b];
                    auto gamma = t.projections[c] * diffs[k] * in_s;
                    diffs[k] = alpha + -(beta * delta_inv * gamma);
                    if (k > 0) diffs[k - 1] = pr_s * diffs[k - 1];
                    if (k + 1 < diffs.size()) diffs[k + 1] = diffs[k + 1] * in_t;
                    blocks[k] = std::move(rest_s);
                    blocks[k + 1] = std::move(rest_t);
                    changed = true;
                }
        }
    }
    std::vector<Representation<F>> terms;
    for (std::size_t k = 0; k < blocks.size(); ++k) terms.push_back(sums(k).sum);
    return LComplex<F>(alg, lo, std::move(terms), std::move(diffs), std::move(blocks));
}

/// No block component of any differential is an isomorphism.
template <ExactField F>
bool is_radical_complex(const LComplex<F>& x) {
    if (x.empty()) return true;
    for (int i = x.lo(); i < x.hi(); ++i) {
        auto s = direct_sum(x.context(), x.blocks(i)), t = direct_sum(x.context(), x.blocks(i + 1));
        for (std::size_t b = 0; b < x.blocks(i).size(); ++b)
            for (std::size_t c = 0; c < x.blocks(i + 1).size(); ++c)
                if (x.blocks(i)[b].dims() == x.blocks(i + 1)[c].dims() &&
                    (t.projections[c] * x.d(i) * s.injections[b]).is_isomorphism())
                    return false;
    }
    return true;
}

/// Distance between the lowest and highest nonzero degrees after normalization.
template <ExactField F>
std::size_t term_length(const LComplex<F>& x) {
    auto s = radical_normalize(x).support();
    return s ? static_cast<std::size_t>(s->second - s->first) : 0;
}

/// X -f-> Y -g-> Z -> X[1], the last map being the roof Z <-φ- M(f) -> X[1].
template <ExactField F>
struct Triangle {
    LChainMap<F> f;
    LChainMap<F> g;
    Cone<LambdaModules<F>> cone;
    LChainMap<F> comparison;  // φ: M(f) -> Z
    bool verified = false;
};

/// For a degreewise F-exact 0 -> X -> Y -> Z -> 0, the map φ = (0, g): M(f) -> Z
/// and a check that it is an F-quasi-isomorphism.
template <ExactField F>
Triangle<F> triangle_from_f_exact(const LChainMap<F>& f, const LChainMap<F>& g, const SubbifunctorF<F>& fs) {
    const auto& x = f.source();
    const auto& y = f.target();
    const auto& z = g.target();
    if (!(g.source() == y)) throw std::invalid_argument("maps are not composable");
    int lo = std::min({x.empty() ? 0 : x.lo(), y.empty() ? 0 : y.lo(), z.empty() ? 0 : z.lo()});
    int hi = std::max({x.empty() ? 0 : x.hi(), y.empty() ? 0 : y.hi(), z.empty() ? 0 : z.hi()});
    for (int i = lo; i <= hi; ++i)
        if (!is_f_exact(ShortExactSeq<F>{f.at(i), g.at(i)}, fs))
            throw std::invalid_argument("sequence is not F-exact in degree " + std::to_string(i));
    auto c = cone(f);
    std::vector<ModuleMap<F>> phi;
    for (int i = c.complex.lo(); i <= c.complex.hi(); ++i) {
        auto ds = direct_sum(c.complex.context(), {x.at(i + 1), y.at(i)});
        phi.push_back(g.at(i) * ds.projections[1]);
    }
    LChainMap<F> comparison(c.complex, z, std::move(phi));
    bool ok = is_f_quasi_iso(comparison, fs);
    return {f, g, std::move(c), std::move(comparison), ok};
}

}  // namespace relhom

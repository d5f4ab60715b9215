#pragma once

// Bounded complexes over a module category, chain maps, shifts, mapping cones
// and Hom in the homotopy category.
//
// The category is a traits type (see ModuleCategory); LambdaModules<F> is the
// category of representations of a path algebra.

#include "relhom/quiveralg/module_ops.hpp"

#include <algorithm>
#include <concepts>

namespace relhom {

template <class C>
concept ModuleCategory = requires(const typename C::Object& a, const typename C::Morphism& m,
                                  const typename C::Context& ctx, const std::vector<typename C::Object>& parts) {
    requires ExactField<typename C::Field>;
    { C::context(a) } -> std::convertible_to<typename C::Context>;
    { C::field(ctx) } -> std::convertible_to<typename C::Field>;
    { C::zero_object(ctx) } -> std::same_as<typename C::Object>;
    { C::is_zero(a) } -> std::convertible_to<bool>;
    { C::zero_map(a, a) } -> std::same_as<typename C::Morphism>;
    { C::identity(a) } -> std::same_as<typename C::Morphism>;
    { C::hom_basis(a, a) } -> std::same_as<std::vector<typename C::Morphism>>;
    { C::flat_size(a, a) } -> std::convertible_to<std::size_t>;
    { C::unflatten(a, a, std::span<const typename C::Field::value_type>{}) } -> std::same_as<typename C::Morphism>;
    C::sum(ctx, parts).sum;
    C::sum(ctx, parts).injections;
    C::sum(ctx, parts).projections;
    { m * m } -> std::same_as<typename C::Morphism>;
    { m + m } -> std::same_as<typename C::Morphism>;
    { -m } -> std::same_as<typename C::Morphism>;
    { m.flatten() } -> std::same_as<std::vector<typename C::Field::value_type>>;
    { m.is_zero() } -> std::convertible_to<bool>;
    m.source();
    m.target();
    { a == a } -> std::convertible_to<bool>;
};

/// Representations of a path algebra.
template <ExactField F>
struct LambdaModules {
    using Field = F;
    using Object = Representation<F>;
    using Morphism = ModuleMap<F>;
    using Context = AlgebraPtr<F>;

    static Context context(const Object& o) { return o.algebra_ptr(); }
    static const F& field(const Context& c) { return c->field(); }
    static Object zero_object(const Context& c) { return Representation<F>::zero(c); }
    static bool is_zero(const Object& o) { return o.is_zero(); }
    static Morphism zero_map(const Object& a, const Object& b) { return ModuleMap<F>::zero(a, b); }
    static Morphism identity(const Object& a) { return ModuleMap<F>::identity(a); }
    static std::vector<Morphism> hom_basis(const Object& a, const Object& b) { return hom_space(a, b).basis; }
    static std::size_t flat_size(const Object& a, const Object& b) {
        std::size_t n = 0;
        for (std::size_t v = 0; v < a.vertex_count(); ++v) n += a.dim(v) * b.dim(v);
        return n;
    }
    static Morphism unflatten(const Object& a, const Object& b, std::span<const typename F::value_type> v) {
        return ModuleMap<F>::unflatten(a, b, v);
    }
    static DirectSum<F> sum(const Context& c, const std::vector<Object>& parts) { return direct_sum(c, parts); }
};

template <ModuleCategory C>
class Complex {
public:
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;
    using Context = typename C::Context;

    Complex() = default;

    /// terms[k] sits in degree lo + k; diffs[k]: terms[k] -> terms[k+1].  Each
    /// term may be given as an ordered list of blocks whose direct sum it is.
    Complex(Context ctx, int lo, std::vector<Object> terms, std::vector<Morphism> diffs,
            std::vector<std::vector<Object>> blocks = {})
        : ctx_(std::move(ctx)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)), blocks_(std::move(blocks)) {
        zero_ = C::zero_object(ctx_);
        if (terms_.empty()) lo_ = 0;
        if (diffs_.size() + 1 != terms_.size() && !(terms_.empty() && diffs_.empty()))
            throw std::invalid_argument("complex needs one differential between consecutive terms");
        for (std::size_t k = 0; k < diffs_.size(); ++k)
            if (!(diffs_[k].source() == terms_[k]) || !(diffs_[k].target() == terms_[k + 1]))
                throw std::invalid_argument("differential in degree " + std::to_string(lo_ + static_cast<int>(k)) +
                                            " has the wrong source or target");
        for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
            if (!(diffs_[k + 1] * diffs_[k]).is_zero())
                throw std::invalid_argument("d∘d is not zero in degree " + std::to_string(lo_ + static_cast<int>(k)));
        if (blocks_.empty()) {
            for (const auto& t : terms_) blocks_.push_back(C::is_zero(t) ? std::vector<Object>{} : std::vector<Object>{t});
        } else {
            if (blocks_.size() != terms_.size()) throw std::invalid_argument("block list has the wrong length");
            for (std::size_t k = 0; k < terms_.size(); ++k)
                if (!(C::sum(ctx_, blocks_[k]).sum == terms_[k]))
                    throw std::invalid_argument("blocks do not sum to the term in degree " +
                                                std::to_string(lo_ + static_cast<int>(k)));
        }
    }

    static Complex zero(const Context& ctx) { return Complex(ctx, 0, {}, {}); }

    static Complex stalk(const Object& m, int degree, std::vector<Object> blocks = {}) {
        std::vector<std::vector<Object>> b;
        if (!blocks.empty()) b.push_back(std::move(blocks));
        return Complex(C::context(m), degree, {m}, {}, std::move(b));
    }

    [[nodiscard]] const Context& context() const { return ctx_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] int lo() const { return lo_; }
    [[nodiscard]] int hi() const { return lo_ + static_cast<int>(terms_.size()) - 1; }
    [[nodiscard]] std::size_t width() const { return terms_.empty() ? 0 : terms_.size() - 1; }
    [[nodiscard]] bool in_range(int i) const { return !terms_.empty() && i >= lo_ && i <= hi(); }

    [[nodiscard]] const Object& at(int i) const { return in_range(i) ? terms_[static_cast<std::size_t>(i - lo_)] : zero_; }

    /// d^i: X^i -> X^{i+1}.
    [[nodiscard]] Morphism d(int i) const {
        if (in_range(i) && in_range(i + 1)) return diffs_[static_cast<std::size_t>(i - lo_)];
        return C::zero_map(at(i), at(i + 1));
    }

    [[nodiscard]] const std::vector<Object>& blocks(int i) const {
        static const std::vector<Object> none;
        return in_range(i) ? blocks_[static_cast<std::size_t>(i - lo_)] : none;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(terms_.begin(), terms_.end(), [](const Object& o) { return C::is_zero(o); });
    }

    /// Lowest and highest degrees with a nonzero term.
    [[nodiscard]] std::optional<std::pair<int, int>> support() const {
        std::optional<std::pair<int, int>> s;
        for (int i = lo_; i <= hi(); ++i)
            if (!C::is_zero(at(i))) s = s ? std::pair{s->first, i} : std::pair{i, i};
        return s;
    }

    friend bool operator==(const Complex& a, const Complex& b) {
        auto sa = a.support(), sb = b.support();
        if (sa != sb) return false;
        if (!sa) return true;
        for (int i = sa->first; i <= sa->second; ++i) {
            if (!(a.at(i) == b.at(i))) return false;
            if (i < sa->second && !(a.d(i).flatten() == b.d(i).flatten())) return false;
        }
        return true;
    }

private:
    Context ctx_{};
    int lo_ = 0;
    std::vector<Object> terms_;
    std::vector<Morphism> diffs_;
    std::vector<std::vector<Object>> blocks_;
    Object zero_{};
};

template <ModuleCategory C>
class ChainMap {
public:
    using Morphism = typename C::Morphism;

    ChainMap() = default;

    /// comps[k] is the component in degree source.lo() + k.
    ChainMap(Complex<C> source, Complex<C> target, std::vector<Morphism> comps, bool check = true)
        : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(comps)) {
        if (comps_.size() != static_cast<std::size_t>(src_.empty() ? 0 : src_.width() + 1))
            throw std::invalid_argument("chain map has the wrong number of components");
        for (int i = src_.lo(); i <= src_.hi(); ++i) {
            const auto& c = comps_[static_cast<std::size_t>(i - src_.lo())];
            if (!(c.source() == src_.at(i)) || !(c.target() == tgt_.at(i)))
                throw std::invalid_argument("chain map component in degree " + std::to_string(i) + " has the wrong type");
        }
        if (check && !commutes()) throw std::invalid_argument("chain map does not commute with the differentials");
    }

    static ChainMap zero(const Complex<C>& s, const Complex<C>& t) {
        std::vector<Morphism> c;
        for (int i = s.lo(); i <= s.hi(); ++i) c.push_back(C::zero_map(s.at(i), t.at(i)));
        return ChainMap(s, t, std::move(c), false);
    }

    static ChainMap identity(const Complex<C>& s) {
        std::vector<Morphism> c;
        for (int i = s.lo(); i <= s.hi(); ++i) c.push_back(C::identity(s.at(i)));
        return ChainMap(s, s, std::move(c), false);
    }

    [[nodiscard]] const Complex<C>& source() const { return src_; }
    [[nodiscard]] const Complex<C>& target() const { return tgt_; }
    [[nodiscard]] const std::vector<Morphism>& components() const { return comps_; }

    [[nodiscard]] Morphism at(int i) const {
        if (src_.in_range(i)) return comps_[static_cast<std::size_t>(i - src_.lo())];
        return C::zero_map(src_.at(i), tgt_.at(i));
    }

    [[nodiscard]] bool commutes() const {
        if (src_.empty()) return true;
        for (int i = src_.lo() - 1; i <= src_.hi(); ++i)
            if (!(tgt_.d(i) * at(i) + -(at(i + 1) * src_.d(i))).is_zero()) return false;
        return true;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(comps_.begin(), comps_.end(), [](const Morphism& m) { return m.is_zero(); });
    }

    /// Concatenated flattenings of the components.
    [[nodiscard]] auto flatten() const {
        std::vector<typename C::Field::value_type> out;
        for (const auto& c : comps_) {
            auto f = c.flatten();
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }

    /// g * f is the composite g ∘ f.
    friend ChainMap operator*(const ChainMap& g, const ChainMap& f) {
        std::vector<Morphism> c;
        for (int i = f.src_.lo(); i <= f.src_.hi(); ++i) c.push_back(g.at(i) * f.at(i));
        return ChainMap(f.src_, g.tgt_, std::move(c), false);
    }
    friend ChainMap operator+(const ChainMap& a, const ChainMap& b) {
        std::vector<Morphism> c;
        for (std::size_t k = 0; k < a.comps_.size(); ++k) c.push_back(a.comps_[k] + b.comps_.at(k));
        return ChainMap(a.src_, a.tgt_, std::move(c), false);
    }
    friend ChainMap operator-(const ChainMap& a) {
        std::vector<Morphism> c;
        for (const auto& m : a.comps_) c.push_back(-m);
        return ChainMap(a.src_, a.tgt_, std::move(c), false);
    }
    friend ChainMap operator-(const ChainMap& a, const ChainMap& b) { return a + (-b); }
    friend ChainMap operator*(const typename C::Field::value_type& s, const ChainMap& a) {
        std::vector<Morphism> c;
        for (const auto& m : a.comps_) c.push_back(s * m);
        return ChainMap(a.src_, a.tgt_, std::move(c), false);
    }

private:
    Complex<C> src_;
    Complex<C> tgt_;
    std::vector<Morphism> comps_;
};

/// X[n]: (X[n])^i = X^{i+n}, d = (−1)^n d_X.
template <ModuleCategory C>
Complex<C> shift(const Complex<C>& x, int n) {
    if (x.empty()) return x;
    std::vector<typename C::Object> terms;
    std::vector<typename C::Morphism> diffs;
    std::vector<std::vector<typename C::Object>> blocks;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        terms.push_back(x.at(i));
        blocks.push_back(x.blocks(i));
        if (i < x.hi()) diffs.push_back(n % 2 == 0 ? x.d(i) : -x.d(i));
    }
    return Complex<C>(x.context(), x.lo() - n, std::move(terms), std::move(diffs), std::move(blocks));
}

/// The same map between shifted complexes: f[n]^i = f^{i+n}.
template <ModuleCategory C>
ChainMap<C> shift(const ChainMap<C>& f, int n) {
    return ChainMap<C>(shift(f.source(), n), shift(f.target(), n), f.components(), false);
}

template <ModuleCategory C>
struct ComplexSum {
    Complex<C> sum;
    std::vector<ChainMap<C>> injections;
    std::vector<ChainMap<C>> projections;
};

template <ModuleCategory C>
ComplexSum<C> direct_sum(const typename C::Context& ctx, const std::vector<Complex<C>>& parts) {
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        lo = any ? std::min(lo, p.lo()) : p.lo();
        hi = any ? std::max(hi, p.hi()) : p.hi();
        any = true;
    }
    std::vector<Object> terms;
    std::vector<Morphism> diffs;
    std::vector<std::vector<Object>> blocks;
    std::vector<decltype(C::sum(ctx, {}))> sums;
    for (int i = lo; i <= hi; ++i) {
        std::vector<Object> objs;
        std::vector<Object> bl;
        for (const auto& p : parts) {
            objs.push_back(p.at(i));
            bl.insert(bl.end(), p.blocks(i).begin(), p.blocks(i).end());
        }
        sums.push_back(C::sum(ctx, objs));
        terms.push_back(sums.back().sum);
        blocks.push_back(std::move(bl));
    }
    for (int i = lo; i < hi; ++i) {
        const auto& s = sums[static_cast<std::size_t>(i - lo)];
        const auto& t = sums[static_cast<std::size_t>(i - lo + 1)];
        auto d = C::zero_map(s.sum, t.sum);
        for (std::size_t k = 0; k < parts.size(); ++k) d = d + t.injections[k] * parts[k].d(i) * s.projections[k];
        diffs.push_back(std::move(d));
    }
    ComplexSum<C> out{Complex<C>(ctx, lo, std::move(terms), std::move(diffs), std::move(blocks)), {}, {}};
    for (std::size_t k = 0; k < parts.size(); ++k) {
        std::vector<Morphism> inj, proj;
        for (int i = parts[k].lo(); i <= parts[k].hi(); ++i)
            inj.push_back(sums[static_cast<std::size_t>(i - lo)].injections[k]);
        for (int i = lo; i <= hi; ++i) proj.push_back(sums[static_cast<std::size_t>(i - lo)].projections[k]);
        if (parts[k].empty()) inj.clear();
        out.injections.emplace_back(parts[k], out.sum, std::move(inj), false);
        out.projections.emplace_back(out.sum, parts[k], std::move(proj), false);
    }
    return out;
}

template <ModuleCategory C>
struct Cone {
    Complex<C> complex;
    ChainMap<C> from_target;  // Y -> M(f)
    ChainMap<C> to_shift;     // M(f) -> X[1]
};

/// M(f)^i = X^{i+1} ⊕ Y^i with differential (x, y) ↦ (−d_X x, f x + d_Y y).
template <ModuleCategory C>
Cone<C> cone(const ChainMap<C>& f) {
    using Object = typename C::Object;
    using Morphism = typename C::Morphism;
    const auto& x = f.source();
    const auto& y = f.target();
    const auto& ctx = y.context();
    int lo = 0, hi = -1;
    if (!x.empty() && !y.empty()) {
        lo = std::min(x.lo() - 1, y.lo());
        hi = std::max(x.hi() - 1, y.hi());
    } else if (!x.empty()) {
        lo = x.lo() - 1;
        hi = x.hi() - 1;
    } else if (!y.empty()) {
        lo = y.lo();
        hi = y.hi();
    }
    std::vector<decltype(C::sum(ctx, {}))> sums;
    std::vector<Object> terms;
    std::vector<std::vector<Object>> blocks;
    for (int i = lo; i <= hi; ++i) {
        sums.push_back(C::sum(ctx, {x.at(i + 1), y.at(i)}));
        terms.push_back(sums.back().sum);
        auto bl = x.blocks(i + 1);
        bl.insert(bl.end(), y.blocks(i).begin(), y.blocks(i).end());
        blocks.push_back(std::move(bl));
    }
    std::vector<Morphism> diffs;
    for (int i = lo; i < hi; ++i) {
        const auto& s = sums[static_cast<std::size_t>(i - lo)];
        const auto& t = sums[static_cast<std::size_t>(i - lo + 1)];
        diffs.push_back(t.injections[0] * -x.d(i + 1) * s.projections[0] + t.injections[1] * f.at(i + 1) * s.projections[0] +
                        t.injections[1] * y.d(i) * s.projections[1]);
    }
    Complex<C> m(ctx, lo, std::move(terms), std::move(diffs), std::move(blocks));
    std::vector<Morphism> in, out;
    for (int i = y.lo(); i <= y.hi() && !y.empty(); ++i) in.push_back(sums[static_cast<std::size_t>(i - lo)].injections[1]);
    for (int i = lo; i <= hi; ++i) out.push_back(sums[static_cast<std::size_t>(i - lo)].projections[0]);
    ChainMap<C> from_target(y, m, std::move(in), false);
    ChainMap<C> to_shift(m, shift(x, 1), std::move(out), false);
    return {std::move(m), std::move(from_target), std::move(to_shift)};
}

/// Hom_K(X, Y[n]): chain maps modulo null-homotopic maps.
template <ModuleCategory C>
struct HomK {
    using value_type = typename C::Field::value_type;
    using F = typename C::Field;

    Complex<C> source;
    Complex<C> target;              // Y[n]
    int shift = 0;
    std::vector<ChainMap<C>> basis; // class representatives
    Matrix<F> rep_flat;             // columns: flattened representatives
    Matrix<F> null_flat;            // columns: images of a basis of homotopies
    std::vector<std::vector<typename C::Morphism>> homotopy_basis;  // per column of null_flat, s^i by degree

    [[nodiscard]] std::size_t dim() const { return basis.size(); }

    [[nodiscard]] bool is_null_homotopic(const ChainMap<C>& g) const {
        auto v = g.flatten();
        return in_span(null_flat, Matrix<F>(null_flat.field(), v.size(), 1, v));
    }

    /// Coordinates of the class of g in the representative basis.
    [[nodiscard]] std::vector<value_type> coordinates(const ChainMap<C>& g) const {
        auto v = g.flatten();
        auto sol = solve(hstack(rep_flat, null_flat), Matrix<F>(rep_flat.field(), v.size(), 1, v));
        if (!sol) throw std::invalid_argument("not a chain map between these complexes");
        std::vector<value_type> out;
        for (std::size_t k = 0; k < basis.size(); ++k) out.push_back((*sol)(k, 0));
        return out;
    }

    [[nodiscard]] ChainMap<C> combine(std::span<const value_type> coeffs) const {
        auto m = ChainMap<C>::zero(source, target);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!coeffs[k].is_zero()) m = m + coeffs[k] * basis[k];
        return m;
    }
};

template <ModuleCategory C>
HomK<C> hom_k(const Complex<C>& x, const Complex<C>& y, int n) {
    using F = typename C::Field;
    using Morphism = typename C::Morphism;
    const auto field = C::field(y.context());
    auto yn = shift(y, n);
    HomK<C> out{x, yn, n, {}, Matrix<F>(field, 0, 0), Matrix<F>(field, 0, 0), {}};
    if (x.empty()) return out;

    const int lo = x.lo(), hi = x.hi();
    const auto nd = static_cast<std::size_t>(hi - lo + 1);
    std::vector<std::vector<Morphism>> hb(nd);       // basis of Hom(X^i, Y[n]^i)
    std::vector<std::size_t> amb_off(nd + 1, 0);     // ambient offsets
    std::vector<std::size_t> coef_off(nd + 1, 0);
    for (int i = lo; i <= hi; ++i) {
        auto k = static_cast<std::size_t>(i - lo);
        hb[k] = C::hom_basis(x.at(i), yn.at(i));
        amb_off[k + 1] = amb_off[k] + C::flat_size(x.at(i), yn.at(i));
        coef_off[k + 1] = coef_off[k] + hb[k].size();
    }
    // chain condition d_{Y[n]}^i f^i − f^{i+1} d_X^i = 0 in Hom(X^i, Y[n]^{i+1})
    std::vector<std::size_t> eq_off(nd + 1, 0);
    for (int i = lo; i <= hi; ++i) {
        auto k = static_cast<std::size_t>(i - lo);
        eq_off[k + 1] = eq_off[k] + C::flat_size(x.at(i), yn.at(i + 1));
    }
    Matrix<F> sys(field, eq_off[nd], coef_off[nd]);
    Matrix<F> embed(field, amb_off[nd], coef_off[nd]);
    for (int i = lo; i <= hi; ++i) {
        auto k = static_cast<std::size_t>(i - lo);
        for (std::size_t b = 0; b < hb[k].size(); ++b) {
            const auto col = coef_off[k] + b;
            auto flat = hb[k][b].flatten();
            for (std::size_t r = 0; r < flat.size(); ++r) embed(amb_off[k] + r, col) = flat[r];
            auto up = (yn.d(i) * hb[k][b]).flatten();
            for (std::size_t r = 0; r < up.size(); ++r) sys(eq_off[k] + r, col) += up[r];
            if (k > 0) {
                auto down = (hb[k][b] * x.d(i - 1)).flatten();
                for (std::size_t r = 0; r < down.size(); ++r) sys(eq_off[k - 1] + r, col) -= down[r];
            }
        }
    }
    auto z = embed * kernel_basis(sys);

    // null-homotopic maps d_{Y[n]}^{i−1} s^i + s^{i+1} d_X^i with s^i: X^i -> Y[n]^{i−1}
    std::vector<std::vector<typename F::value_type>> null_cols;
    for (int i = lo; i <= hi; ++i) {
        auto k = static_cast<std::size_t>(i - lo);
        for (const auto& s : C::hom_basis(x.at(i), yn.at(i - 1))) {
            std::vector<typename F::value_type> col(amb_off[nd], field.zero());
            auto a = (yn.d(i - 1) * s).flatten();
            for (std::size_t r = 0; r < a.size(); ++r) col[amb_off[k] + r] += a[r];
            if (k > 0) {
                auto b = (s * x.d(i - 1)).flatten();
                for (std::size_t r = 0; r < b.size(); ++r) col[amb_off[k - 1] + r] += b[r];
            }
            null_cols.push_back(std::move(col));
            std::vector<Morphism> hs;
            for (int j = lo; j <= hi; ++j) hs.push_back(j == i ? s : C::zero_map(x.at(j), yn.at(j - 1)));
            out.homotopy_basis.push_back(std::move(hs));
        }
    }
    out.null_flat = from_columns(field, amb_off[nd], null_cols);
    auto piv = independent_columns(hstack(out.null_flat, z));
    std::vector<std::size_t> reps;
    for (auto p : piv)
        if (p >= out.null_flat.cols()) reps.push_back(p - out.null_flat.cols());
    out.rep_flat = z.select_columns(reps);
    for (std::size_t c = 0; c < out.rep_flat.cols(); ++c) {
        auto v = out.rep_flat.column(c).flatten();
        std::vector<Morphism> comps;
        for (int i = lo; i <= hi; ++i) {
            auto k = static_cast<std::size_t>(i - lo);
            comps.push_back(C::unflatten(x.at(i), yn.at(i),
                                         std::span<const typename F::value_type>(v).subspan(amb_off[k], amb_off[k + 1] - amb_off[k])));
        }
        out.basis.emplace_back(x, yn, std::move(comps), false);
    }
    return out;
}

/// s^i: X^i -> Y^{i−1} with f = d s + s d.
template <ModuleCategory C>
struct Homotopy {
    ChainMap<C> map;
    std::vector<typename C::Morphism> components;  // by degree from map.source().lo()

    [[nodiscard]] bool verify() const {
        const auto& x = map.source();
        const auto& y = map.target();
        auto s = [&](int i) {
            return x.in_range(i) ? components[static_cast<std::size_t>(i - x.lo())] : C::zero_map(x.at(i), y.at(i - 1));
        };
        for (int i = x.lo(); i <= x.hi(); ++i)
            if (!(map.at(i) + -(y.d(i - 1) * s(i) + s(i + 1) * x.d(i))).is_zero()) return false;
        return true;
    }
};

/// A homotopy exhibiting m as null-homotopic, if there is one.
template <ModuleCategory C>
std::optional<Homotopy<C>> null_homotopy(const ChainMap<C>& m) {
    auto h = hom_k(m.source(), m.target(), 0);
    if (!h.is_null_homotopic(m)) return std::nullopt;
    const auto& x = m.source();
    Homotopy<C> out{m, {}};
    for (int i = x.lo(); i <= x.hi(); ++i) out.components.push_back(C::zero_map(x.at(i), m.target().at(i - 1)));
    if (h.null_flat.cols() == 0) return out;
    auto v = m.flatten();
    auto sol = solve(h.null_flat, Matrix<typename C::Field>(h.null_flat.field(), v.size(), 1, v));
    for (std::size_t c = 0; c < h.homotopy_basis.size(); ++c) {
        const auto coeff = (*sol)(c, 0);
        if (coeff.is_zero()) continue;
        for (std::size_t k = 0; k < out.components.size(); ++k)
            out.components[k] = out.components[k] + coeff * h.homotopy_basis[c][k];
    }
    return out;
}

}  // namespace relhom

#pragma once

// Finite-dimensional modules as quiver representations, and module maps.
//
// An arrow a: i -> j acts by a matrix X_a of shape d_j x d_i; the path "a b"
// acts by X_b X_a.  Both types are cheap value handles over immutable data.

#include "relhom/quiveralg/path_algebra.hpp"

#include <memory>
#include <numeric>
#include <string>
#include <vector>

namespace relhom {

template <ExactField F>
bool same_algebra(const PathAlgebra<F>& a, const PathAlgebra<F>& b) {
    if (&a == &b) return true;
    return a.quiver() == b.quiver() && a.nilpotency_bound() == b.nilpotency_bound() && a.basis() == b.basis();
}

template <ExactField F>
class Representation {
public:
    using Mat = Matrix<F>;

    Representation() = default;

    /// Validates shapes, the relations and the nilpotency bound.
    Representation(AlgebraPtr<F> alg, std::vector<std::size_t> dims, std::vector<Mat> arrow_maps)
        : impl_(std::make_shared<Impl>(Impl{std::move(alg), std::move(dims), std::move(arrow_maps)})) {
        validate();
    }

    static Representation zero(AlgebraPtr<F> alg) {
        const auto& q = alg->quiver();
        std::vector<Mat> maps;
        for (std::size_t a = 0; a < q.arrows().size(); ++a) maps.emplace_back(alg->field(), 0, 0);
        return Representation(alg, std::vector<std::size_t>(q.vertex_count(), 0), std::move(maps), unchecked{});
    }

    [[nodiscard]] const AlgebraPtr<F>& algebra_ptr() const { return impl_->alg; }
    [[nodiscard]] const PathAlgebra<F>& algebra() const { return *impl_->alg; }
    [[nodiscard]] const F& field() const { return impl_->alg->field(); }
    [[nodiscard]] std::size_t vertex_count() const { return impl_->dims.size(); }
    [[nodiscard]] const std::vector<std::size_t>& dims() const { return impl_->dims; }
    [[nodiscard]] std::size_t dim(std::size_t v) const { return impl_->dims.at(v); }
    [[nodiscard]] std::size_t total_dim() const {
        return std::accumulate(impl_->dims.begin(), impl_->dims.end(), std::size_t{0});
    }
    [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
    [[nodiscard]] const Mat& arrow_map(std::size_t a) const { return impl_->maps.at(a); }
    [[nodiscard]] const std::vector<Mat>& arrow_maps() const { return impl_->maps; }

    /// Matrix of the action of a path (d_end x d_start).
    [[nodiscard]] Mat path_action(const Path& p) const {
        Mat m = Mat::identity(field(), dim(p.start));
        for (auto a : p.arrows) m = arrow_map(a) * m;
        return m;
    }

    [[nodiscard]] bool same_algebra_as(const Representation& o) const {
        return same_algebra(algebra(), o.algebra());
    }

    friend bool operator==(const Representation& a, const Representation& b) {
        return a.impl_ == b.impl_ || (a.dims() == b.dims() && a.arrow_maps() == b.arrow_maps());
    }

    struct unchecked {};
    Representation(AlgebraPtr<F> alg, std::vector<std::size_t> dims, std::vector<Mat> arrow_maps, unchecked)
        : impl_(std::make_shared<Impl>(Impl{std::move(alg), std::move(dims), std::move(arrow_maps)})) {}

private:
    struct Impl {
        AlgebraPtr<F> alg;
        std::vector<std::size_t> dims;
        std::vector<Mat> maps;
    };

    void validate() const {
        const auto& alg = algebra();
        const auto& q = alg.quiver();
        if (impl_->dims.size() != q.vertex_count()) throw std::invalid_argument("dimension vector has wrong length");
        if (impl_->maps.size() != q.arrows().size()) throw std::invalid_argument("wrong number of arrow matrices");
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            const auto& arr = q.arrow(a);
            const auto& m = impl_->maps[a];
            if (m.rows() != dim(arr.target) || m.cols() != dim(arr.source))
                throw std::invalid_argument("matrix for arrow '" + arr.name + "' has the wrong shape");
        }
        for (const auto& rel : alg.relations()) {
            const auto& first = rel.front().path;
            Mat sum(field(), dim(alg.end_vertex(first)), dim(first.start));
            for (const auto& t : rel) sum += t.coeff * path_action(t.path);
            if (!sum.is_zero()) throw std::invalid_argument("representation does not satisfy a relation");
        }
        // Paths of length N must act as zero.
        std::vector<Path> layer;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) layer.push_back({v, {}});
        for (std::size_t len = 1; len <= alg.nilpotency_bound(); ++len) {
            std::vector<Path> next;
            for (const auto& p : layer)
                for (std::size_t a = 0; a < q.arrows().size(); ++a)
                    if (q.arrow(a).source == alg.end_vertex(p)) {
                        Path n = p;
                        n.arrows.push_back(a);
                        next.push_back(std::move(n));
                    }
            layer = std::move(next);
        }
        for (const auto& p : layer)
            if (!path_action(p).is_zero())
                throw std::invalid_argument("representation is not annihilated by paths of length N");
    }

    std::shared_ptr<const Impl> impl_;
};

template <ExactField F>
class ModuleMap {
public:
    using Mat = Matrix<F>;
    using value_type = typename F::value_type;

    ModuleMap() = default;
    ModuleMap(Representation<F> source, Representation<F> target, std::vector<Mat> components, bool check = true)
        : src_(std::move(source)), tgt_(std::move(target)), comps_(std::move(components)) {
        if (comps_.size() != src_.vertex_count()) throw std::invalid_argument("module map has wrong number of components");
        for (std::size_t v = 0; v < comps_.size(); ++v)
            if (comps_[v].rows() != tgt_.dim(v) || comps_[v].cols() != src_.dim(v))
                throw std::invalid_argument("module map component has the wrong shape");
        if (check && !is_homomorphism()) throw std::invalid_argument("maps do not intertwine the arrow actions");
    }

    static ModuleMap identity(const Representation<F>& m) {
        std::vector<Mat> c;
        for (std::size_t v = 0; v < m.vertex_count(); ++v) c.push_back(Mat::identity(m.field(), m.dim(v)));
        return ModuleMap(m, m, std::move(c), false);
    }

    static ModuleMap zero(const Representation<F>& s, const Representation<F>& t) {
        std::vector<Mat> c;
        for (std::size_t v = 0; v < s.vertex_count(); ++v) c.emplace_back(s.field(), t.dim(v), s.dim(v));
        return ModuleMap(s, t, std::move(c), false);
    }

    [[nodiscard]] const Representation<F>& source() const { return src_; }
    [[nodiscard]] const Representation<F>& target() const { return tgt_; }
    [[nodiscard]] const Mat& component(std::size_t v) const { return comps_.at(v); }
    [[nodiscard]] const std::vector<Mat>& components() const { return comps_; }
    [[nodiscard]] const F& field() const { return src_.field(); }

    [[nodiscard]] bool is_homomorphism() const {
        const auto& q = src_.algebra().quiver();
        for (std::size_t a = 0; a < q.arrows().size(); ++a) {
            const auto& arr = q.arrow(a);
            if (!(tgt_.arrow_map(a) * comps_[arr.source] == comps_[arr.target] * src_.arrow_map(a))) return false;
        }
        return true;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }
    [[nodiscard]] bool is_injective() const {
        for (const auto& c : comps_)
            if (rank(c) != c.cols()) return false;
        return true;
    }
    [[nodiscard]] bool is_surjective() const {
        for (const auto& c : comps_)
            if (rank(c) != c.rows()) return false;
        return true;
    }
    [[nodiscard]] bool is_isomorphism() const {
        for (const auto& c : comps_)
            if (!is_invertible(c) && !(c.rows() == 0 && c.cols() == 0)) return false;
        return true;
    }

    /// Concatenation of the column-major flattenings of the components.
    [[nodiscard]] std::vector<value_type> flatten() const {
        std::vector<value_type> out;
        for (const auto& c : comps_) {
            auto f = c.flatten();
            out.insert(out.end(), f.begin(), f.end());
        }
        return out;
    }

    [[nodiscard]] std::size_t flat_size() const {
        std::size_t n = 0;
        for (const auto& c : comps_) n += c.rows() * c.cols();
        return n;
    }

    static ModuleMap unflatten(const Representation<F>& s, const Representation<F>& t, std::span<const value_type> v) {
        std::vector<Mat> c;
        std::size_t off = 0;
        for (std::size_t x = 0; x < s.vertex_count(); ++x) {
            auto n = t.dim(x) * s.dim(x);
            c.push_back(Mat::unflatten(s.field(), t.dim(x), s.dim(x), v.subspan(off, n)));
            off += n;
        }
        return ModuleMap(s, t, std::move(c), false);
    }

    /// g * f is the composite g o f.
    friend ModuleMap operator*(const ModuleMap& g, const ModuleMap& f) {
        if (g.src_.dims() != f.tgt_.dims()) throw std::invalid_argument("module maps are not composable");
        std::vector<Mat> c;
        for (std::size_t v = 0; v < f.comps_.size(); ++v) c.push_back(g.comps_[v] * f.comps_[v]);
        return ModuleMap(f.src_, g.tgt_, std::move(c), false);
    }
    friend ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
        std::vector<Mat> c;
        for (std::size_t v = 0; v < a.comps_.size(); ++v) c.push_back(a.comps_[v] + b.comps_.at(v));
        return ModuleMap(a.src_, a.tgt_, std::move(c), false);
    }
    friend ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) {
        std::vector<Mat> c;
        for (std::size_t v = 0; v < a.comps_.size(); ++v) c.push_back(a.comps_[v] - b.comps_.at(v));
        return ModuleMap(a.src_, a.tgt_, std::move(c), false);
    }
    friend ModuleMap operator-(const ModuleMap& a) {
        std::vector<Mat> c;
        for (const auto& m : a.comps_) c.push_back(-m);
        return ModuleMap(a.src_, a.tgt_, std::move(c), false);
    }
    friend ModuleMap operator*(const value_type& s, const ModuleMap& a) {
        std::vector<Mat> c;
        for (const auto& m : a.comps_) c.push_back(s * m);
        return ModuleMap(a.src_, a.tgt_, std::move(c), false);
    }
    friend bool operator==(const ModuleMap& a, const ModuleMap& b) { return a.comps_ == b.comps_; }

private:
    Representation<F> src_;
    Representation<F> tgt_;
    std::vector<Mat> comps_;
};

/// A short exact sequence 0 -> A -f-> B -g-> C -> 0.
template <ExactField F>
struct ShortExactSeq {
    ModuleMap<F> f;
    ModuleMap<F> g;

    /// Injectivity, surjectivity, image = kernel and dimension additivity, vertexwise.
    [[nodiscard]] bool is_exact() const {
        if (!f.is_injective() || !g.is_surjective()) return false;
        if (!(g * f).is_zero()) return false;
        for (std::size_t v = 0; v < f.source().vertex_count(); ++v) {
            if (f.target().dim(v) != f.source().dim(v) + g.target().dim(v)) return false;
            if (rank(f.component(v)) + rank(g.component(v)) != f.target().dim(v)) return false;
        }
        return true;
    }
};

}  // namespace relhom

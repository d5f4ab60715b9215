#pragma once

// Path algebras kQ/I with admissible relations.
//
// Paths compose left to right: the word "a b" means "a, then b", so a path is
// the sequence of arrows in travel order.  Vertices are 0-based here; the
// file format uses 1-based vertex numbers.
//
// The ideal is I = <relations> + J^N where J is the arrow ideal.  The basis of
// kQ/I is computed by linear algebra on the (finite) space of paths of length
// < N: the ideal's truncation is row reduced with columns ordered by
// decreasing (length, lex) so that each row's pivot is its leading path; the
// non-leading paths are the standard basis and every path reduces to a unique
// combination of them.

#include "relhom/exactlin/matrix.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace relhom {

struct Arrow {
    std::string name;
    std::size_t source = 0;
    std::size_t target = 0;
    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
public:
    Quiver() = default;
    Quiver(std::size_t vertices, std::vector<Arrow> arrows) : n_(vertices), arrows_(std::move(arrows)) {
        std::set<std::string> names;
        for (const auto& a : arrows_) {
            if (a.source >= n_ || a.target >= n_)
                throw std::invalid_argument("arrow '" + a.name + "' has an endpoint outside the vertex range");
            if (!names.insert(a.name).second) throw std::invalid_argument("duplicate arrow name '" + a.name + "'");
        }
    }

    [[nodiscard]] std::size_t vertex_count() const { return n_; }
    [[nodiscard]] const std::vector<Arrow>& arrows() const { return arrows_; }
    [[nodiscard]] const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

    [[nodiscard]] std::size_t arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows_.size(); ++i)
            if (arrows_[i].name == name) return i;
        throw std::invalid_argument("unknown arrow '" + name + "'");
    }

    [[nodiscard]] Quiver opposite() const {
        auto rev = arrows_;
        for (auto& a : rev) std::swap(a.source, a.target);
        return Quiver(n_, std::move(rev));
    }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Arrow> arrows_;
};

/// A path: start vertex plus arrows in travel order.  Trivial paths have no arrows.
struct Path {
    std::size_t start = 0;
    std::vector<std::size_t> arrows;

    [[nodiscard]] std::size_t length() const { return arrows.size(); }
    friend bool operator==(const Path&, const Path&) = default;
};

/// Total order used for leading terms and basis enumeration: length, then
/// lexicographic on arrow indices, then start vertex (only matters for trivial paths).
inline bool path_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.start < b.start;
}

template <ExactField F>
struct RelationTerm {
    typename F::value_type coeff;
    Path path;
};

template <ExactField F>
using Relation = std::vector<RelationTerm<F>>;

template <ExactField F>
using SparseVec = std::vector<std::pair<std::size_t, typename F::value_type>>;

template <ExactField F>
class PathAlgebra {
public:
    using value_type = typename F::value_type;

    [[nodiscard]] const F& field() const { return field_; }
    [[nodiscard]] const Quiver& quiver() const { return quiver_; }
    [[nodiscard]] const std::vector<Relation<F>>& relations() const { return relations_; }
    [[nodiscard]] std::size_t nilpotency_bound() const { return bound_; }
    [[nodiscard]] std::size_t vertex_count() const { return quiver_.vertex_count(); }
    [[nodiscard]] std::size_t dimension() const { return basis_.size(); }
    [[nodiscard]] const std::vector<Path>& basis() const { return basis_; }
    [[nodiscard]] const Path& basis_path(std::size_t i) const { return basis_.at(i); }

    [[nodiscard]] std::size_t end_vertex(const Path& p) const {
        return p.arrows.empty() ? p.start : quiver_.arrow(p.arrows.back()).target;
    }

    /// Basis indices of paths from `from` to `to`, in basis order.
    [[nodiscard]] const std::vector<std::size_t>& paths_between(std::size_t from, std::size_t to) const {
        return between_.at(from * vertex_count() + to);
    }

    /// Position of the trivial path e_v inside paths_between(v, v).
    [[nodiscard]] std::size_t trivial_path(std::size_t v) const { return trivial_.at(v); }

    /// Reduced form of an arbitrary path as a combination of basis paths.
    [[nodiscard]] SparseVec<F> normal_form(const Path& p) const {
        check_composable(p);
        if (p.length() >= bound_) return {};
        auto it = path_index_.find(key(p));
        if (it == path_index_.end()) throw std::logic_error("path missing from enumeration");
        return reductions_.at(it->second);
    }

    /// Product of basis elements: x then y (zero when not composable).
    [[nodiscard]] SparseVec<F> multiply(std::size_t x, std::size_t y) const {
        const auto& px = basis_.at(x);
        const auto& py = basis_.at(y);
        if (end_vertex(px) != py.start) return {};
        Path c{px.start, px.arrows};
        c.arrows.insert(c.arrows.end(), py.arrows.begin(), py.arrows.end());
        return normal_form(c);
    }

    /// Same quiver, reversed arrows and relation words.
    [[nodiscard]] std::shared_ptr<const PathAlgebra> opposite() const {
        std::vector<Relation<F>> rev;
        for (const auto& rel : relations_) {
            Relation<F> r;
            for (const auto& t : rel) r.push_back({t.coeff, reverse(t.path)});
            rev.push_back(std::move(r));
        }
        return build(field_, quiver_.opposite(), std::move(rev), bound_);
    }

    /// Reverse of a path of this algebra, as a path of the opposite algebra.
    [[nodiscard]] Path reverse(const Path& p) const {
        Path r{end_vertex(p), {p.arrows.rbegin(), p.arrows.rend()}};
        return r;
    }

    [[nodiscard]] std::string path_name(const Path& p) const {
        if (p.arrows.empty()) return "e" + std::to_string(p.start + 1);
        std::string s;
        for (std::size_t i = 0; i < p.arrows.size(); ++i) s += (i ? " " : "") + quiver_.arrow(p.arrows[i]).name;
        return s;
    }

    /// Builds kQ/(relations + J^N).  Rejects relations with terms of length < 2,
    /// non-parallel terms, and N < 2.
    static std::shared_ptr<const PathAlgebra> build(F field, Quiver quiver, std::vector<Relation<F>> relations,
                                                    std::size_t bound) {
        auto alg = std::shared_ptr<PathAlgebra>(new PathAlgebra());
        alg->field_ = std::move(field);
        alg->quiver_ = std::move(quiver);
        alg->relations_ = std::move(relations);
        alg->bound_ = bound;
        alg->init();
        return alg;
    }

private:
    PathAlgebra() = default;

    using Key = std::pair<std::size_t, std::vector<std::size_t>>;
    static Key key(const Path& p) { return {p.start, p.arrows}; }

    void check_composable(const Path& p) const {
        if (p.start >= vertex_count()) throw std::invalid_argument("path start out of range");
        std::size_t at = p.start;
        for (auto a : p.arrows) {
            const auto& arr = quiver_.arrow(a);
            if (arr.source != at) throw std::invalid_argument("path is not composable");
            at = arr.target;
        }
    }

    void init() {
        if (bound_ < 2) throw std::invalid_argument("nilpotency bound must be at least 2");
        for (const auto& rel : relations_) {
            if (rel.empty()) throw std::invalid_argument("empty relation");
            for (const auto& t : rel) {
                check_composable(t.path);
                if (t.path.length() < 2)
                    throw std::invalid_argument("relation is not admissible: term '" + path_name(t.path) +
                                                "' has length < 2");
                if (t.path.start != rel.front().path.start || end_vertex(t.path) != end_vertex(rel.front().path))
                    throw std::invalid_argument("relation terms are not parallel");
            }
        }

        // Every path of length < N, ordered by path_less.
        std::vector<Path> all;
        for (std::size_t v = 0; v < vertex_count(); ++v) all.push_back({v, {}});
        std::vector<Path> layer = all;
        for (std::size_t len = 1; len < bound_; ++len) {
            std::vector<Path> next;
            for (const auto& p : layer)
                for (std::size_t a = 0; a < quiver_.arrows().size(); ++a)
                    if (quiver_.arrow(a).source == end_vertex(p)) {
                        Path q = p;
                        q.arrows.push_back(a);
                        next.push_back(std::move(q));
                    }
            all.insert(all.end(), next.begin(), next.end());
            layer = std::move(next);
        }
        std::sort(all.begin(), all.end(), path_less);
        std::map<Key, std::size_t> index;
        for (std::size_t i = 0; i < all.size(); ++i) index[key(all[i])] = i;

        // Column c of the ideal matrix holds path all[size-1-c] (largest first).
        const std::size_t np = all.size();
        auto col_of = [np](std::size_t i) { return np - 1 - i; };
        std::vector<std::vector<value_type>> rows;
        auto ending_at = [&](std::size_t v) {
            std::vector<const Path*> out;
            for (const auto& p : all)
                if (end_vertex(p) == v) out.push_back(&p);
            return out;
        };
        for (const auto& rel : relations_) {
            const auto s = rel.front().path.start;
            const auto t = end_vertex(rel.front().path);
            for (const Path* u : ending_at(s)) {
                for (const auto& v : all) {
                    if (v.start != t) continue;
                    std::vector<value_type> row(np, field_.zero());
                    bool any = false;
                    for (const auto& term : rel) {
                        Path w{u->start, u->arrows};
                        w.arrows.insert(w.arrows.end(), term.path.arrows.begin(), term.path.arrows.end());
                        w.arrows.insert(w.arrows.end(), v.arrows.begin(), v.arrows.end());
                        if (w.length() >= bound_) continue;
                        row[col_of(index.at(key(w)))] += term.coeff;
                        any = true;
                    }
                    if (any) rows.push_back(std::move(row));
                }
            }
        }
        std::vector<value_type> flat;
        for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
        Matrix<F> ideal(field_, rows.size(), np, std::move(flat));
        auto [red, pivots] = rref(std::move(ideal));

        std::vector<bool> leading(np, false);
        for (auto c : pivots) leading[np - 1 - c] = true;
        for (std::size_t i = 0; i < np; ++i)
            if (!leading[i]) basis_.push_back(all[i]);
        for (std::size_t v = 0; v < vertex_count(); ++v)
            if (leading[index.at(key(Path{v, {}}))])
                throw std::invalid_argument("relations kill a trivial path");

        std::map<Key, std::size_t> basis_index;
        for (std::size_t b = 0; b < basis_.size(); ++b) basis_index[key(basis_[b])] = b;

        reductions_.resize(np);
        for (std::size_t i = 0; i < np; ++i) {
            path_index_[key(all[i])] = i;
            if (!leading[i]) {
                reductions_[i] = {{basis_index.at(key(all[i])), field_.one()}};
            }
        }
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            std::size_t lead = np - 1 - pivots[r];
            SparseVec<F> nf;
            for (std::size_t c = pivots[r] + 1; c < np; ++c) {
                if (red(r, c).is_zero()) continue;
                const auto& p = all[np - 1 - c];
                nf.push_back({basis_index.at(key(p)), -red(r, c)});
            }
            std::sort(nf.begin(), nf.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            reductions_[lead] = std::move(nf);
        }

        const auto n = vertex_count();
        between_.assign(n * n, {});
        for (std::size_t b = 0; b < basis_.size(); ++b)
            between_[basis_[b].start * n + end_vertex(basis_[b])].push_back(b);
        trivial_.assign(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
            const auto& list = between_[v * n + v];
            for (std::size_t k = 0; k < list.size(); ++k)
                if (basis_[list[k]].arrows.empty()) trivial_[v] = k;
        }
    }

    F field_{};
    Quiver quiver_;
    std::vector<Relation<F>> relations_;
    std::size_t bound_ = 2;
    std::vector<Path> basis_;
    std::map<Key, std::size_t> path_index_;
    std::vector<SparseVec<F>> reductions_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::size_t> trivial_;
};

template <ExactField F>
using AlgebraPtr = std::shared_ptr<const PathAlgebra<F>>;

}  // namespace relhom

#pragma once

// Finite-dimensional algebras given by structure constants, and their left modules.

#include "relhom/exactlin/matrix.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace relhom {

template <ExactField F>
class AbstractAlgebra;

template <ExactField F>
using AbstractAlgebraPtr = std::shared_ptr<const AbstractAlgebra<F>>;

/// e_i e_j = Σ_k c[i][j][k] e_k.  Stored as left multiplication matrices.
template <ExactField F>
class AbstractAlgebra : public std::enable_shared_from_this<AbstractAlgebra<F>> {
public:
    using value_type = typename F::value_type;
    using Vec = std::vector<value_type>;

    /// products[i][j] holds the coordinates of e_i e_j.  A radical basis (columns)
    /// may be supplied; it is then validated.  Without one, the radical is the
    /// kernel of the trace form in characteristic zero, and in characteristic p
    /// it is found when the idempotents have local split corners.  Idempotents,
    /// when given, must be complete and orthogonal; the default is {1}.
    static AbstractAlgebraPtr<F> make(F field, const std::vector<std::vector<Vec>>& products, Vec unit,
                                      std::optional<Matrix<F>> radical = std::nullopt, std::vector<Vec> idempotents = {}) {
        return std::shared_ptr<AbstractAlgebra>(
            new AbstractAlgebra(std::move(field), products, std::move(unit), std::move(radical), std::move(idempotents)));
    }

    [[nodiscard]] const F& field() const { return field_; }
    [[nodiscard]] std::size_t dim() const { return left_.size(); }
    [[nodiscard]] const Vec& unit() const { return unit_; }

    /// x ↦ e_i x.
    [[nodiscard]] const Matrix<F>& left(std::size_t i) const { return left_.at(i); }
    /// x ↦ x e_i.
    [[nodiscard]] const Matrix<F>& right(std::size_t i) const { return right_.at(i); }

    [[nodiscard]] Vec product(std::size_t i, std::size_t j) const { return left_[i].column(j).flatten(); }

    [[nodiscard]] Vec multiply(const Vec& x, const Vec& y) const {
        return (left_of(x) * Matrix<F>(field_, dim(), 1, y)).flatten();
    }

    [[nodiscard]] Matrix<F> left_of(const Vec& x) const {
        Matrix<F> m(field_, dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!x[i].is_zero()) m += x[i] * left_[i];
        return m;
    }

    [[nodiscard]] Vec basis_vector(std::size_t i) const {
        Vec v(dim(), field_.zero());
        v.at(i) = field_.one();
        return v;
    }

    /// Columns span the Jacobson radical.
    [[nodiscard]] const Matrix<F>& radical() const {
        if (!radical_) throw std::logic_error("no radical: characteristic p needs a supplied radical basis or local idempotents");
        return *radical_;
    }
    [[nodiscard]] bool has_radical() const { return radical_.has_value(); }

    /// Complete set of orthogonal idempotents used for projective covers.
    [[nodiscard]] const std::vector<Vec>& idempotents() const { return idempotents_; }

    /// Basis elements spanning A modulo rad², hence generating A as an algebra.
    [[nodiscard]] const std::vector<std::size_t>& generators() const { return generators_; }

    /// Same space with e_i * e_j = e_j e_i.
    [[nodiscard]] AbstractAlgebraPtr<F> opposite() const {
        std::vector<std::vector<Vec>> prod(dim(), std::vector<Vec>(dim()));
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) prod[i][j] = product(j, i);
        return make(field_, prod, unit_, radical_, idempotents_);
    }

    /// tr(L_{e_i e_j}).
    [[nodiscard]] Matrix<F> trace_form() const {
        Vec traces;
        for (const auto& l : left_) {
            auto t = field_.zero();
            for (std::size_t k = 0; k < dim(); ++k) t += l(k, k);
            traces.push_back(t);
        }
        Matrix<F> b(field_, dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                auto t = field_.zero();
                for (std::size_t k = 0; k < dim(); ++k) t += left_[i](k, j) * traces[k];
                b(i, j) = t;
            }
        return b;
    }

    /// Span of the products of the column spaces of a and b.
    [[nodiscard]] Matrix<F> product_space(const Matrix<F>& a, const Matrix<F>& b) const {
        std::vector<Vec> cols;
        for (std::size_t i = 0; i < a.cols(); ++i) {
            auto la = left_of(a.column(i).flatten());
            for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back((la * b.column(j)).flatten());
        }
        return column_space(from_columns(field_, dim(), cols));
    }

private:
    AbstractAlgebra(F field, const std::vector<std::vector<Vec>>& products, Vec unit, std::optional<Matrix<F>> radical,
                    std::vector<Vec> idempotents)
        : field_(std::move(field)), unit_(std::move(unit)), idempotents_(std::move(idempotents)) {
        const auto d = products.size();
        if (unit_.size() != d) throw std::invalid_argument("unit has the wrong length");
        for (std::size_t i = 0; i < d; ++i) {
            if (products[i].size() != d) throw std::invalid_argument("structure constants are not square");
            Matrix<F> l(field_, d, d);
            for (std::size_t j = 0; j < d; ++j) {
                if (products[i][j].size() != d) throw std::invalid_argument("product vector has the wrong length");
                for (std::size_t k = 0; k < d; ++k) l(k, j) = products[i][j][k];
            }
            left_.push_back(std::move(l));
        }
        for (std::size_t j = 0; j < d; ++j) {
            Matrix<F> r(field_, d, d);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t k = 0; k < d; ++k) r(k, i) = left_[i](k, j);
            right_.push_back(std::move(r));
        }
        validate();
        if (idempotents_.empty()) idempotents_.push_back(unit_);
        validate_idempotents();
        if (radical) {
            validate_radical(*radical);
            radical_ = column_space(*radical);
            if (radical->cols() == 0) radical_ = Matrix<F>(field_, d, 0);
        } else if (field_.characteristic() == 0) {
            radical_ = kernel_basis(trace_form());
            validate_radical(*radical_);
        } else if (auto r = local_radical()) {
            validate_radical(*r);
            radical_ = std::move(r);
        }
        init_generators();
    }

    /// x ↦ x a.
    [[nodiscard]] Matrix<F> right_of(const Vec& a) const {
        Matrix<F> m(field_, dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (!a[i].is_zero()) m += a[i] * right_[i];
        return m;
    }

    [[nodiscard]] Vec power(Vec x, std::uint64_t n) const {
        auto out = unit_;
        while (n > 0) {
            if (n & 1) out = multiply(out, x);
            x = multiply(x, x);
            n >>= 1;
        }
        return out;
    }

    /// Radical over a prime field when every idempotent has a local corner
    /// e A e with residue field F.  Then x^(p^N) = λ(x) e for x in e A e and N
    /// large, and x lies in rad A iff λ_i(e_i y x a e_i) = 0 for all y, a.
    [[nodiscard]] std::optional<Matrix<F>> local_radical() const {
        const auto d = dim();
        const auto p = field_.characteristic();
        std::uint64_t q = p;
        while (q <= d) q *= p;
        std::vector<Matrix<F>> rows;
        for (const auto& e : idempotents_) {
            auto le = left_of(e), re = right_of(e);
            auto proj = le * re;  // z ↦ e z e
            auto corner = column_space(proj);
            Matrix<F> lambda(field_, 1, corner.cols());
            for (std::size_t c = 0; c < corner.cols(); ++c) {
                auto z = power(corner.column(c).flatten(), q);
                std::size_t lead = 0;
                while (lead < d && e[lead].is_zero()) ++lead;
                auto mu = z[lead] / e[lead];
                for (std::size_t k = 0; k < d; ++k)
                    if (z[k] != mu * e[k]) return std::nullopt;
                lambda(0, c) = mu;
            }
            // functional z ↦ λ(e z e) on all of A
            auto coords = left_inverse(corner) * proj;
            auto functional = lambda * coords;
            auto left_basis = column_space(le), right_basis = column_space(re);
            for (std::size_t y = 0; y < left_basis.cols(); ++y) {
                auto ly = functional * left_of(left_basis.column(y).flatten());
                for (std::size_t a = 0; a < right_basis.cols(); ++a) rows.push_back(ly * right_of(right_basis.column(a).flatten()));
            }
        }
        Matrix<F> sys(field_, rows.size(), d);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < d; ++c) sys(r, c) = rows[r](0, c);
        auto rad = kernel_basis(sys);
        if (rad.cols() == 0) return Matrix<F>(field_, d, 0);
        return rad;
    }

    void validate() const {
        const auto d = dim();
        // (e_i e_j) e_k = e_i (e_j e_k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                auto lij = left_of(product(i, j));
                if (!(lij == left_[i] * left_[j])) throw std::invalid_argument("structure constants are not associative");
            }
        auto lu = left_of(unit_);
        if (!(lu == Matrix<F>::identity(field_, d))) throw std::invalid_argument("unit is not a left unit");
        Matrix<F> ru(field_, d, d);
        for (std::size_t i = 0; i < d; ++i)
            if (!unit_[i].is_zero()) ru += unit_[i] * right_[i];
        if (!(ru == Matrix<F>::identity(field_, d))) throw std::invalid_argument("unit is not a right unit");
    }

    void validate_idempotents() const {
        Vec sum(dim(), field_.zero());
        for (std::size_t i = 0; i < idempotents_.size(); ++i) {
            const auto& e = idempotents_[i];
            if (e.size() != dim()) throw std::invalid_argument("idempotent has the wrong length");
            if (std::all_of(e.begin(), e.end(), [](const value_type& x) { return x.is_zero(); }))
                throw std::invalid_argument("idempotent is zero");
            for (std::size_t k = 0; k < dim(); ++k) sum[k] += e[k];
            for (std::size_t j = 0; j < idempotents_.size(); ++j) {
                auto p = multiply(e, idempotents_[j]);
                if (p != (i == j ? e : Vec(dim(), field_.zero())))
                    throw std::invalid_argument("idempotents are not orthogonal idempotents");
            }
        }
        if (sum != unit_) throw std::invalid_argument("idempotents do not sum to 1");
    }

    /// Two-sided ideal, nilpotent, with nondegenerate trace form on the quotient.
    void validate_radical(const Matrix<F>& r) const {
        const auto d = dim();
        if (r.rows() != d) throw std::invalid_argument("radical basis has the wrong length");
        auto basis = column_space(r);
        for (std::size_t i = 0; i < d; ++i)
            if (!in_span(basis, left_[i] * basis) || !in_span(basis, right_[i] * basis))
                throw std::invalid_argument("radical basis is not a two-sided ideal");
        auto power = basis;
        for (std::size_t k = 0; power.cols() > 0; ++k) {
            if (k > d) throw std::invalid_argument("radical basis is not nilpotent");
            power = product_space(basis, power);
        }
        auto q = quotient_by(field_, d, basis);
        const auto n = q.projection.rows();
        std::vector<Matrix<F>> lq;
        for (std::size_t i = 0; i < n; ++i) lq.push_back(q.projection * left_of(q.section.column(i).flatten()) * q.section);
        Matrix<F> form(field_, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto prod = lq[i] * lq[j];
                auto t = field_.zero();
                for (std::size_t k = 0; k < n; ++k) t += prod(k, k);
                form(i, j) = t;
            }
        if (field_.characteristic() == 0 && rank(form) != n)
            throw std::invalid_argument("quotient by the radical basis has a degenerate trace form");
    }

    void init_generators() {
        if (!radical_) {
            for (std::size_t i = 0; i < dim(); ++i) generators_.push_back(i);
            return;
        }
        auto r2 = product_space(*radical_, *radical_);
        auto piv = independent_columns(hstack(r2, Matrix<F>::identity(field_, dim())));
        for (auto p : piv)
            if (p >= r2.cols()) generators_.push_back(p - r2.cols());
    }

    F field_;
    Vec unit_;
    std::vector<Matrix<F>> left_;
    std::vector<Matrix<F>> right_;
    std::vector<Vec> idempotents_;
    std::optional<Matrix<F>> radical_;
    std::vector<std::size_t> generators_;
};

/// A left module: one action matrix per algebra basis element.
template <ExactField F>
class AbstractModule {
public:
    using value_type = typename F::value_type;
    using Vec = std::vector<value_type>;

    AbstractModule() = default;

    AbstractModule(AbstractAlgebraPtr<F> alg, std::size_t dim, std::vector<Matrix<F>> action, bool check = true)
        : alg_(std::move(alg)), dim_(dim), action_(std::move(action)) {
        if (action_.size() != alg_->dim()) throw std::invalid_argument("one action matrix per basis element is required");
        for (const auto& a : action_)
            if (a.rows() != dim_ || a.cols() != dim_) throw std::invalid_argument("action matrix has the wrong size");
        if (check) validate();
    }

    static AbstractModule zero(const AbstractAlgebraPtr<F>& alg) {
        return AbstractModule(alg, 0, std::vector<Matrix<F>>(alg->dim(), Matrix<F>(alg->field(), 0, 0)), false);
    }

    static AbstractModule regular(const AbstractAlgebraPtr<F>& alg) { return free(alg, 1); }

    /// A^r, coordinates ordered generator by generator.
    static AbstractModule free(const AbstractAlgebraPtr<F>& alg, std::size_t r) {
        std::vector<Matrix<F>> act;
        for (std::size_t i = 0; i < alg->dim(); ++i) {
            Matrix<F> m(alg->field(), r * alg->dim(), r * alg->dim());
            for (std::size_t k = 0; k < r; ++k) m.set_block(k * alg->dim(), k * alg->dim(), alg->left(i));
            act.push_back(std::move(m));
        }
        return AbstractModule(alg, r * alg->dim(), std::move(act), false);
    }

    /// A viewed as a left module over A^op (right multiplication).
    static AbstractModule right_regular(const AbstractAlgebraPtr<F>& alg, const AbstractAlgebraPtr<F>& opp) {
        std::vector<Matrix<F>> act;
        for (std::size_t i = 0; i < alg->dim(); ++i) act.push_back(alg->right(i));
        return AbstractModule(opp, alg->dim(), std::move(act));
    }

    [[nodiscard]] const AbstractAlgebraPtr<F>& algebra_ptr() const { return alg_; }
    [[nodiscard]] const AbstractAlgebra<F>& algebra() const { return *alg_; }
    [[nodiscard]] const F& field() const { return alg_->field(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] bool is_zero() const { return dim_ == 0; }
    [[nodiscard]] const Matrix<F>& action(std::size_t i) const { return action_.at(i); }
    [[nodiscard]] const std::vector<Matrix<F>>& actions() const { return action_; }

    [[nodiscard]] Matrix<F> act(const Vec& x) const {
        Matrix<F> m(field(), dim_, dim_);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (!x[i].is_zero()) m += x[i] * action_[i];
        return m;
    }

    /// Columns span rad(A)·M.
    [[nodiscard]] Matrix<F> radical_part() const {
        std::vector<Vec> cols;
        const auto& r = alg_->radical();
        for (std::size_t c = 0; c < r.cols(); ++c) {
            auto a = act(r.column(c).flatten());
            for (std::size_t j = 0; j < dim_; ++j) cols.push_back(a.column(j).flatten());
        }
        return column_space(from_columns(field(), dim_, cols));
    }

    /// D M = Hom_k(M, k) as a left module over the opposite algebra.
    [[nodiscard]] AbstractModule dual(const AbstractAlgebraPtr<F>& opp) const {
        std::vector<Matrix<F>> act;
        for (const auto& a : action_) act.push_back(a.transpose());
        return AbstractModule(opp, dim_, std::move(act));
    }

    friend bool operator==(const AbstractModule& a, const AbstractModule& b) {
        return a.alg_ == b.alg_ && a.dim_ == b.dim_ && a.action_ == b.action_;
    }

private:
    void validate() const {
        const auto& a = *alg_;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                if (!(act(a.product(i, j)) == action_[i] * action_[j]))
                    throw std::invalid_argument("action does not respect the multiplication");
        if (!(act(a.unit()) == Matrix<F>::identity(field(), dim_))) throw std::invalid_argument("unit does not act as 1");
    }

    AbstractAlgebraPtr<F> alg_;
    std::size_t dim_ = 0;
    std::vector<Matrix<F>> action_;
};

template <ExactField F>
class AbstractHom {
public:
    using value_type = typename F::value_type;

    AbstractHom() = default;
    AbstractHom(AbstractModule<F> s, AbstractModule<F> t, Matrix<F> m) : src_(std::move(s)), tgt_(std::move(t)), m_(std::move(m)) {
        if (m_.rows() != tgt_.dim() || m_.cols() != src_.dim()) throw std::invalid_argument("hom matrix has the wrong size");
    }
    static AbstractHom zero(const AbstractModule<F>& s, const AbstractModule<F>& t) {
        return AbstractHom(s, t, Matrix<F>(s.field(), t.dim(), s.dim()));
    }
    static AbstractHom identity(const AbstractModule<F>& s) {
        return AbstractHom(s, s, Matrix<F>::identity(s.field(), s.dim()));
    }

    [[nodiscard]] const AbstractModule<F>& source() const { return src_; }
    [[nodiscard]] const AbstractModule<F>& target() const { return tgt_; }
    [[nodiscard]] const Matrix<F>& matrix() const { return m_; }
    [[nodiscard]] bool is_zero() const { return m_.is_zero(); }
    [[nodiscard]] std::vector<value_type> flatten() const { return m_.flatten(); }

    [[nodiscard]] bool is_homomorphism() const {
        for (std::size_t i = 0; i < src_.algebra().dim(); ++i)
            if (!(tgt_.action(i) * m_ == m_ * src_.action(i))) return false;
        return true;
    }

    friend AbstractHom operator*(const AbstractHom& g, const AbstractHom& f) { return AbstractHom(f.src_, g.tgt_, g.m_ * f.m_); }
    friend AbstractHom operator+(const AbstractHom& a, const AbstractHom& b) { return AbstractHom(a.src_, a.tgt_, a.m_ + b.m_); }
    friend AbstractHom operator-(const AbstractHom& a) { return AbstractHom(a.src_, a.tgt_, -a.m_); }
    friend AbstractHom operator-(const AbstractHom& a, const AbstractHom& b) { return a + (-b); }
    friend AbstractHom operator*(const value_type& s, const AbstractHom& a) { return AbstractHom(a.src_, a.tgt_, s * a.m_); }
    friend bool operator==(const AbstractHom& a, const AbstractHom& b) { return a.m_ == b.m_; }

private:
    AbstractModule<F> src_;
    AbstractModule<F> tgt_;
    Matrix<F> m_;
};

/// Basis of Hom_A(M, N); the equations use algebra generators only.
template <ExactField F>
std::vector<AbstractHom<F>> abstract_hom_basis(const AbstractModule<F>& m, const AbstractModule<F>& n) {
    const auto& field = m.field();
    const auto rows = n.dim(), cols = m.dim();
    std::vector<AbstractHom<F>> out;
    if (rows == 0 || cols == 0) return out;
    const auto& gens = m.algebra().generators();
    // X column-major: unknown (r, c) at index c * rows + r
    Matrix<F> sys(field, gens.size() * rows * cols, rows * cols);
    std::size_t eq = 0;
    for (auto g : gens) {
        const auto& an = n.action(g);
        const auto& am = m.action(g);
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r, ++eq) {
                // (A_N X − X A_M)(r, c)
                for (std::size_t k = 0; k < rows; ++k)
                    if (!an(r, k).is_zero()) sys(eq, c * rows + k) += an(r, k);
                for (std::size_t k = 0; k < cols; ++k)
                    if (!am(k, c).is_zero()) sys(eq, k * rows + r) -= am(k, c);
            }
    }
    auto ker = kernel_basis(sys);
    for (std::size_t j = 0; j < ker.cols(); ++j)
        out.emplace_back(m, n, Matrix<F>::unflatten(field, rows, cols, ker.column(j).flatten()));
    return out;
}

template <ExactField F>
struct AbstractSum {
    AbstractModule<F> sum;
    std::vector<AbstractHom<F>> injections;
    std::vector<AbstractHom<F>> projections;
};

template <ExactField F>
AbstractSum<F> direct_sum(const AbstractAlgebraPtr<F>& alg, const std::vector<AbstractModule<F>>& parts) {
    const auto& field = alg->field();
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim();
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        Matrix<F> m(field, total, total);
        std::size_t off = 0;
        for (const auto& p : parts) {
            m.set_block(off, off, p.action(i));
            off += p.dim();
        }
        act.push_back(std::move(m));
    }
    AbstractSum<F> out{AbstractModule<F>(alg, total, std::move(act), false), {}, {}};
    std::size_t off = 0;
    for (const auto& p : parts) {
        Matrix<F> in(field, total, p.dim()), pr(field, p.dim(), total);
        for (std::size_t k = 0; k < p.dim(); ++k) {
            in(off + k, k) = field.one();
            pr(k, off + k) = field.one();
        }
        out.injections.emplace_back(p, out.sum, std::move(in));
        out.projections.emplace_back(out.sum, p, std::move(pr));
        off += p.dim();
    }
    return out;
}

/// Submodule spanned by the columns of `basis` (assumed invariant and independent).
template <ExactField F>
std::pair<AbstractModule<F>, Matrix<F>> abstract_submodule(const AbstractModule<F>& m, const Matrix<F>& basis) {
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        if (basis.cols() == 0) {
            act.emplace_back(m.field(), 0, 0);
            continue;
        }
        auto s = solve(basis, m.action(i) * basis);
        if (!s) throw std::invalid_argument("subspace is not a submodule");
        act.push_back(std::move(*s));
    }
    return {AbstractModule<F>(m.algebra_ptr(), basis.cols(), std::move(act), false), basis};
}

/// M / (column span of sub), with the projection matrix.
template <ExactField F>
std::pair<AbstractModule<F>, Matrix<F>> abstract_quotient(const AbstractModule<F>& m, const Matrix<F>& sub) {
    auto q = quotient_by(m.field(), m.dim(), sub.cols() == 0 ? Matrix<F>(m.field(), m.dim(), 0) : column_space(sub));
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) act.push_back(q.projection * m.action(i) * q.section);
    const auto d = q.projection.rows();
    return {AbstractModule<F>(m.algebra_ptr(), d, std::move(act), false), q.projection};
}

/// A / rad A as a left module.
template <ExactField F>
AbstractModule<F> top_of_algebra(const AbstractAlgebraPtr<F>& alg) {
    return abstract_quotient(AbstractModule<F>::regular(alg), alg->radical()).first;
}

/// Outcome of the check that A / rad A is a product of copies of k.
enum class SplitStatus { split, unknown };

inline const char* to_string(SplitStatus s) {
    switch (s) {
        case SplitStatus::split: return "split";
        default: return "unknown";
    }
}

template <ExactField F>
struct TopReport {
    std::size_t top_dim = 0;  // dim A / rad A
    SplitStatus status = SplitStatus::unknown;
};

/// With the algebra's complete set of orthogonal idempotents e_i, A / rad A ≅ k^n
/// exactly when e_i (A / rad A) e_j has dimension δ_ij.
template <ExactField F>
TopReport<F> top_report(const AbstractAlgebraPtr<F>& alg) {
    const auto& a = *alg;
    const auto& idempotents = a.idempotents();
    const auto& rad = a.radical();
    TopReport<F> out{a.dim() - rad.cols(), SplitStatus::unknown};
    if (out.top_dim <= 1) {
        out.status = SplitStatus::split;
        return out;
    }
    const auto base = rad.cols();
    for (std::size_t i = 0; i < idempotents.size(); ++i)
        for (std::size_t j = 0; j < idempotents.size(); ++j) {
            std::vector<std::vector<typename F::value_type>> cols;
            for (std::size_t b = 0; b < a.dim(); ++b)
                cols.push_back(a.multiply(a.multiply(idempotents[i], a.basis_vector(b)), idempotents[j]));
            auto span = hstack(rad, from_columns(a.field(), a.dim(), cols));
            if (rank(span) - base != (i == j ? 1u : 0u)) return out;
        }
    out.status = SplitStatus::split;
    return out;
}

}  // namespace relhom

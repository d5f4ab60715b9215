#pragma once

// Dimension bounds across a relative derived equivalence, checked on concrete
// data (Λ, F, T, Γ = End(T)).

#include "relhom/tilt/tilting.hpp"

namespace relhom {

enum class CheckStatus { verified, vacuous_at_cutoff, violated };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::verified: return "verified";
        case CheckStatus::vacuous_at_cutoff: return "vacuous-at-cutoff";
        default: return "violated";
    }
}

struct InequalityCheck {
    std::string name;
    std::string statement;
    std::string instance;   // the statement with numbers substituted
    CheckStatus status = CheckStatus::verified;
};

struct BoundsReport {
    std::string title;
    std::size_t cutoff = 10;
    std::vector<DimensionReport> quantities;
    std::size_t term_length = 0;
    std::vector<InequalityCheck> checks;
    std::vector<std::string> notes;

    [[nodiscard]] bool any_violated() const {
        return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.status == CheckStatus::violated; });
    }
    [[nodiscard]] const InequalityCheck& check(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return c;
        throw std::out_of_range("no check named " + name);
    }
    [[nodiscard]] const DimensionReport& quantity(const std::string& name) const {
        for (const auto& q : quantities)
            if (q.quantity == name) return q;
        throw std::out_of_range("no quantity named " + name);
    }
};

/// a + a_off ≤ b + b_off, "violated" only between exact values.
inline InequalityCheck check_leq(std::string name, std::string statement, const DimValue& a, std::size_t a_off,
                                 const DimValue& b, std::size_t b_off) {
    auto side = [](const DimValue& v, std::size_t off) {
        auto s = v.str();
        if (off) s += " + " + std::to_string(off);
        return s;
    };
    InequalityCheck c{std::move(name), std::move(statement), side(a, a_off) + " ≤ " + side(b, b_off), CheckStatus::verified};
    if (a.censored() || b.censored())
        c.status = CheckStatus::vacuous_at_cutoff;
    else if (a.value + a_off > b.value + b_off)
        c.status = CheckStatus::violated;
    return c;
}

/// Projective, simple and injective modules per idempotent: a default Γ-side family.
template <ExactField F>
std::vector<NamedAbstractModule<F>> standard_modules(const AbstractAlgebraPtr<F>& alg) {
    std::vector<NamedAbstractModule<F>> out;
    auto opp = alg->opposite();
    for (std::size_t i = 0; i < alg->idempotents().size(); ++i) {
        auto idx = std::to_string(i + 1);
        auto p = detail::projective_at(alg, i).first;
        out.push_back({"P" + idx, p});
        out.push_back({"S" + idx, abstract_quotient(p, p.radical_part()).first});
        out.push_back({"I" + idx, detail::projective_at(opp, i).first.dual(alg)});
    }
    return out;
}

template <ExactField F>
struct QuadrupleInput {
    SubbifunctorF<F> f;
    std::vector<NamedModule<F>> corpus;              // Λ side
    std::vector<TiltingSummand<F>> tilting;
    std::optional<std::vector<NamedAbstractModule<F>>> gamma_corpus;  // default: standard_modules(Γ)
    std::size_t cutoff = 10;
};

namespace detail {

template <ExactField F>
void require_self_orthogonal(const std::vector<TiltingSummand<F>>& t, const SubbifunctorF<F>& f) {
    auto r = verify_f_tilting(t, f);
    if (!r.in_add_g || !r.orthogonal)
        throw std::invalid_argument("tilting precondition failed: " + (r.failures.empty() ? std::string("?") : r.failures[0]));
}

inline DimensionReport named(DimensionReport r, std::string name) {
    r.quantity = std::move(name);
    return r;
}

}  // namespace detail

/// gldim_F(Λ) − t ≤ gldim(Γ) ≤ gldim_F(Λ) + t + 2 and the same with fd_F and fd,
/// where the fd values are maxima over the supplied corpora.
template <ExactField F>
BoundsReport theorem73_check(const QuadrupleInput<F>& in) {
    detail::require_self_orthogonal(in.tilting, in.f);
    const auto cutoff = in.cutoff;
    BoundsReport r{"theorem73", cutoff, {}, 0, {}, {}};
    auto gf = gldim_f(in.corpus, in.f, cutoff);
    auto ff = findim_f(in.corpus, in.f, cutoff);
    auto t = term_length(sum_of(in.f.algebra_ptr(), in.tilting));
    auto gamma = end_algebra(in.f.algebra_ptr(), in.tilting);
    auto gg = detail::named(abstract_gldim(gamma.algebra, cutoff), "gldim(Γ)");
    auto fg = detail::named(abstract_findim(in.gamma_corpus.value_or(standard_modules(gamma.algebra)), cutoff), "fd(Γ)");
    r.term_length = t;
    r.quantities = {detail::named(gf, "gldim_F(Λ)"), detail::named(ff, "fd_F(Λ)"), gg, fg};
    r.quantities.push_back({"dim Γ", DimValue::exact(gamma.dim()), cutoff, {}, ""});
    r.checks.push_back(check_leq("gldim lower", "gldim_F(Λ) − t ≤ gldim(Γ)", gf.value, 0, gg.value, t));
    r.checks.push_back(check_leq("gldim upper", "gldim(Γ) ≤ gldim_F(Λ) + t + 2", gg.value, 0, gf.value, t + 2));
    r.checks.push_back(check_leq("fd lower", "fd_F(Λ) − t ≤ fd(Γ)", ff.value, 0, fg.value, t));
    r.checks.push_back(check_leq("fd upper", "fd(Γ) ≤ fd_F(Λ) + t + 2", fg.value, 0, ff.value, t + 2));
    r.notes.push_back("fd values are maxima of finite dimensions over the supplied modules, hence lower bounds");
    return r;
}

/// The ordinary case G = Λ: gldim, fd and id of Λ and Γ within l(T).
template <ExactField F>
BoundsReport corollary710_check(const QuadrupleInput<F>& in) {
    if (!in.f.is_ordinary()) throw std::invalid_argument("corollary710 needs G = Λ");
    detail::require_self_orthogonal(in.tilting, in.f);
    const auto cutoff = in.cutoff;
    BoundsReport r{"corollary710", cutoff, {}, 0, {}, {}};
    auto lam = as_abstract_algebra(in.f.algebra_ptr());
    std::vector<NamedAbstractModule<F>> lcorpus;
    for (const auto& m : in.corpus) lcorpus.push_back({m.name, as_abstract_module(m.module, lam)});
    auto gamma = end_algebra(in.f.algebra_ptr(), in.tilting);
    auto l = term_length(sum_of(in.f.algebra_ptr(), in.tilting));
    auto gl = detail::named(abstract_gldim(lam, cutoff), "gldim(Λ)");
    auto gg = detail::named(abstract_gldim(gamma.algebra, cutoff), "gldim(Γ)");
    auto fl = detail::named(abstract_findim(lcorpus, cutoff), "fd(Λ)");
    auto fg = detail::named(abstract_findim(in.gamma_corpus.value_or(standard_modules(gamma.algebra)), cutoff), "fd(Γ)");
    auto il = abstract_gorenstein(lam, cutoff).left;
    auto ig = abstract_gorenstein(gamma.algebra, cutoff).left;
    r.term_length = l;
    r.quantities = {gl, gg, fl, fg, {"id(Λ)", il, cutoff, {}, "injective dimension of the regular module"},
                    {"id(Γ)", ig, cutoff, {}, "injective dimension of the regular module"}};
    r.checks.push_back(check_leq("gldim lower", "gldim(Λ) − l ≤ gldim(Γ)", gl.value, 0, gg.value, l));
    r.checks.push_back(check_leq("gldim upper", "gldim(Γ) ≤ gldim(Λ) + l", gg.value, 0, gl.value, l));
    r.checks.push_back(check_leq("fd lower", "fd(Λ) − l ≤ fd(Γ)", fl.value, 0, fg.value, l));
    r.checks.push_back(check_leq("fd upper", "fd(Γ) ≤ fd(Λ) + l", fg.value, 0, fl.value, l));
    r.checks.push_back(check_leq("id lower", "id(Λ) − l ≤ id(Γ)", il, 0, ig, l));
    r.checks.push_back(check_leq("id upper", "id(Γ) ≤ id(Λ) + l", ig, 0, il, l));
    r.notes.push_back("fd values are maxima of finite dimensions over the supplied modules, hence lower bounds");
    return r;
}

/// |ind P(F)|, the declared summands of T and dim Γ / rad Γ.
template <ExactField F>
BoundsReport prop63_64_counts(const QuadrupleInput<F>& in) {
    BoundsReport r{"counts", in.cutoff, {}, 0, {}, {}};
    auto gamma = end_algebra(in.f.algebra_ptr(), in.tilting);
    auto top = top_report(gamma.algebra);
    const auto pf = in.f.summand_count();
    const auto nt = in.tilting.size();
    r.quantities = {{"|ind P(F)|", DimValue::exact(pf), in.cutoff, {}, ""},
                    {"summands of T", DimValue::exact(nt), in.cutoff, {}, "declared"},
                    {"dim Γ/rad Γ", DimValue::exact(top.top_dim), in.cutoff, {}, std::string("quotient ") + to_string(top.status)}};
    InequalityCheck decl{"declared count", "summands of T = |ind P(F)|", std::to_string(nt) + " = " + std::to_string(pf),
                         nt == pf ? CheckStatus::verified : CheckStatus::violated};
    InequalityCheck simples{"simple count", "dim Γ/rad Γ = |ind P(F)|", std::to_string(top.top_dim) + " = " + std::to_string(pf),
                            CheckStatus::verified};
    if (top.status != SplitStatus::split) {
        simples.status = CheckStatus::vacuous_at_cutoff;
        r.notes.push_back("Γ/rad Γ is not certified split; its dimension bounds the simple count from above");
    } else if (top.top_dim != pf) {
        simples.status = CheckStatus::violated;
    }
    r.checks = {decl, simples};
    return r;
}

/// Relative Gorenstein data of Λ against the Gorenstein property of Γ.
template <ExactField F>
BoundsReport gorenstein_check(const QuadrupleInput<F>& in) {
    const auto cutoff = in.cutoff;
    BoundsReport r{"gorenstein", cutoff, {}, 0, {}, {}};
    auto inj = relative_injectives(in.f, in.corpus);
    if (!inj.validated) r.notes.push_back("I(F) failed validation: " + inj.failures.front());
    FInjectives<F> fi(in.f.algebra_ptr(), inj.members);
    DimensionReport idp{"id_F(P(F))", {}, cutoff, {}, "maximum over the summands of G"};
    std::vector<DimValue> vals;
    for (const auto& s : in.f.summands()) {
        vals.push_back(fi.id_f(s.module, cutoff));
        idp.breakdown.emplace_back(s.name, vals.back());
    }
    idp.value = dim_max(vals, cutoff);
    DimensionReport pdi{"pd_F(I(F))", {}, cutoff, {}, "maximum over I(F)"};
    vals.clear();
    for (const auto& m : inj.members) {
        vals.push_back(pd_f(m.module, in.f, cutoff));
        pdi.breakdown.emplace_back(m.name, vals.back());
    }
    pdi.value = dim_max(vals, cutoff);
    auto gamma = end_algebra(in.f.algebra_ptr(), in.tilting);
    auto g = abstract_gorenstein(gamma.algebra, cutoff);
    auto t = term_length(sum_of(in.f.algebra_ptr(), in.tilting));
    r.term_length = t;
    r.quantities = {idp, pdi, {"id(ΓΓ)", g.left, cutoff, {}, "left regular module"},
                    {"id(ΓΓ) right", g.right, cutoff, {}, "right regular module"}};
    r.checks.push_back(check_leq("id lower", "id_F(P(F)) − t ≤ id(ΓΓ)", idp.value, 0, g.left, t));
    r.checks.push_back(check_leq("id upper", "id(ΓΓ) ≤ id_F(P(F)) + t + 2", g.left, 0, idp.value, t + 2));
    const bool lam = !idp.value.censored() && !pdi.value.censored();
    const bool gam = g.gorenstein();
    InequalityCheck bi{"gorenstein", "Λ F-Gorenstein ⇔ Γ Gorenstein",
                       std::string(lam ? "F-Gorenstein" : "undecided at cutoff") + " ⇔ " + (gam ? "Gorenstein" : "undecided at cutoff"),
                       lam && gam ? CheckStatus::verified : CheckStatus::vacuous_at_cutoff};
    r.checks.push_back(bi);
    return r;
}

}  // namespace relhom

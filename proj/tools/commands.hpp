#pragma once

#include "problem.hpp"
#include "report.hpp"

namespace relhom::cli {

struct Request {
    std::string command;
    std::string sub;
    std::string file;
    std::optional<std::size_t> cutoff;
    std::optional<std::string> field;
    std::string module, with, complex;
    int degree = 1;
    int shift = 0;
    std::size_t map = 0;
    bool check_only = false;
};

namespace detail {

inline json dim_json(const DimValue& v) {
    return json{{"value", v.value}, {"censored", v.censored()}, {"text", v.str()}};
}

inline json dimension_json(const DimensionReport& r) {
    json b = json::array();
    for (const auto& [n, v] : r.breakdown) b.push_back({{"name", n}, {"value", dim_json(v)}});
    return {{"quantity", r.quantity}, {"value", dim_json(r.value)}, {"cutoff", r.cutoff}, {"breakdown", b}, {"note", r.note}};
}

inline std::string dims_text(const std::vector<std::size_t>& d) {
    std::vector<std::string> s;
    for (auto x : d) s.push_back(std::to_string(x));
    return "(" + join(s, ",") + ")";
}

template <ExactField F>
std::string term_text(const Problem<F>& pr, const std::vector<Representation<F>>& blocks) {
    if (blocks.empty()) return "0";
    std::vector<std::string> names;
    for (const auto& b : blocks) names.push_back(pr.name_of(b).value_or(dims_text(b.dims())));
    return join(names, " ⊕ ");
}

template <ExactField F>
std::string parts_text(const SubbifunctorF<F>& f, const std::vector<std::size_t>& parts) {
    if (parts.empty()) return "0";
    std::vector<std::string> names;
    for (auto j : parts) names.push_back(f.summands().at(j).name);
    return join(names, " ⊕ ");
}

template <ExactField F>
void add_resolution(Output& out, const FResolution<F>& res, const SubbifunctorF<F>& f, const std::string& title) {
    auto& t = out.table(title, {"degree", "term", "dim"});
    json terms = json::array();
    for (std::size_t k = 0; k < res.terms.size(); ++k) {
        auto text = parts_text(f, res.parts[k]);
        t.add({std::to_string(-static_cast<int>(k)), text, std::to_string(res.terms[k].total_dim())});
        terms.push_back({{"degree", -static_cast<int>(k)}, {"term", text}, {"dim", res.terms[k].total_dim()}});
    }
    out.report["terms"] = terms;
    out.report["truncated"] = res.truncated;
    out.lines.push_back(res.truncated ? "truncated at the cutoff" : "length " + std::to_string(res.length()));
}

template <ExactField F>
void add_dimension(Output& out, const DimensionReport& r) {
    auto& t = out.table(r.quantity, {"module", "value"});
    for (const auto& [n, v] : r.breakdown) t.add({n, v.str()});
    out.lines.push_back(r.quantity + " = " + r.value.str() + " (cutoff " + std::to_string(r.cutoff) + ")");
    out.report = dimension_json(r);
}

inline void add_bounds(Output& out, const BoundsReport& r) {
    auto& q = out.table(r.title + ": quantities", {"quantity", "value"});
    json qs = json::array(), cs = json::array();
    for (const auto& d : r.quantities) {
        q.add({d.quantity, d.value.str()});
        qs.push_back(dimension_json(d));
    }
    auto& c = out.table(r.title + ": checks", {"check", "statement", "instance", "status"});
    for (const auto& k : r.checks) {
        c.add({k.name, k.statement, k.instance, to_string(k.status)});
        cs.push_back({{"name", k.name}, {"statement", k.statement}, {"instance", k.instance}, {"status", to_string(k.status)}});
        if (k.status == CheckStatus::violated) out.fail();
    }
    for (const auto& n : r.notes) out.lines.push_back("note: " + n);
    out.lines.push_back("term length " + std::to_string(r.term_length) + ", cutoff " + std::to_string(r.cutoff));
    out.report = {{"title", r.title}, {"cutoff", r.cutoff}, {"term_length", r.term_length}, {"quantities", qs}, {"checks", cs}, {"notes", r.notes}};
}

template <ExactField F>
QuadrupleInput<F> quadruple(const Problem<F>& pr, std::size_t cutoff) {
    return {pr.structure(), pr.corpus, pr.tilting_parts(), std::nullopt, cutoff};
}

template <ExactField F>
const Representation<F>& need_module(const Problem<F>& pr, const std::string& name, const char* flag) {
    if (name.empty()) throw input_error(flag, "this command needs " + std::string(flag));
    return pr.module(name);
}

template <ExactField F>
const LComplex<F>& need_complex(const Problem<F>& pr, const std::string& name, const char* flag) {
    if (name.empty()) throw input_error(flag, "this command needs " + std::string(flag));
    return pr.complex(name);
}

template <ExactField F>
void complex_table(Output& out, const Problem<F>& pr, const LComplex<F>& x, const std::string& title) {
    auto& t = out.table(title, {"degree", "term", "dim"});
    json terms = json::array();
    if (!x.empty())
        for (int i = x.lo(); i <= x.hi(); ++i) {
            auto text = term_text(pr, x.blocks(i));
            t.add({std::to_string(i), text, std::to_string(x.at(i).total_dim())});
            terms.push_back({{"degree", i}, {"term", text}, {"dim", x.at(i).total_dim()}});
        }
    out.report["terms"] = terms;
}

// ---------------------------------------------------------------------------

template <ExactField F>
Output cmd_algebra(const Problem<F>& pr) {
    Output out;
    const auto& a = *pr.alg;
    auto& basis = out.table("basis", {"index", "path", "from", "to"});
    json paths = json::array();
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        const auto& p = a.basis_path(k);
        auto name = a.path_name(p);
        basis.add({std::to_string(k), name, std::to_string(p.start + 1), std::to_string(a.end_vertex(p) + 1)});
        paths.push_back(name);
    }
    auto& v = out.table("vertices", {"vertex", "dim P", "dim I", "P dims"});
    json verts = json::array();
    for (std::size_t i = 0; i < a.vertex_count(); ++i) {
        auto p = projective(pr.alg, i), inj = injective(pr.alg, i);
        v.add({std::to_string(i + 1), std::to_string(p.total_dim()), std::to_string(inj.total_dim()), dims_text(p.dims())});
        verts.push_back({{"vertex", i + 1}, {"projective", p.dims()}, {"injective", inj.dims()}});
    }
    out.lines.push_back("field " + pr.field.name() + ", dimension " + std::to_string(a.dimension()));
    out.report = {{"field", pr.field.name()}, {"dimension", a.dimension()}, {"basis", paths}, {"vertices", verts}};
    return out;
}

template <ExactField F>
Output cmd_module(const Problem<F>& pr, const Request& rq, std::size_t cutoff) {
    Output out;
    auto ordinary = SubbifunctorF<F>::ordinary(pr.alg);
    if (rq.sub == "dims") {
        auto& t = out.table("modules", {"module", "dims", "dim", "indecomposable"});
        json ms = json::array();
        for (const auto& n : pr.module_names) {
            const auto& m = pr.modules.at(n);
            std::string ind = m.is_zero() ? "zero" : (check_indecomposable(m).consistent ? "yes" : "no");
            t.add({n, dims_text(m.dims()), std::to_string(m.total_dim()), ind});
            ms.push_back({{"name", n}, {"dims", m.dims()}, {"indecomposable", ind}});
        }
        out.report["modules"] = ms;
    } else if (rq.sub == "resolve") {
        const auto& m = need_module(pr, rq.module, "--module");
        add_resolution(out, f_resolution(m, ordinary, cutoff - 1), ordinary, "projective resolution of " + rq.module);
        out.report["pd"] = dim_json(pd_f(m, ordinary, cutoff));
    } else if (rq.sub == "ext") {
        const auto& x = need_module(pr, rq.module, "--module");
        const auto& y = need_module(pr, rq.with, "--with");
        if (rq.degree < 0) throw input_error("--degree", "must be nonnegative");
        auto e = ext_f(x, y, static_cast<std::size_t>(rq.degree), ordinary);
        out.lines.push_back("dim Ext^" + std::to_string(rq.degree) + "(" + rq.module + ", " + rq.with + ") = " + std::to_string(e));
        out.report = {{"degree", rq.degree}, {"dim", e}};
    } else {
        throw input_error("module", "unknown subcommand '" + rq.sub + "'");
    }
    return out;
}

template <ExactField F>
Output cmd_relhom(const Problem<F>& pr, const Request& rq, std::size_t cutoff) {
    Output out;
    const auto& f = pr.structure();
    if (rq.sub == "resolve") {
        const auto& m = need_module(pr, rq.module, "--module");
        add_resolution(out, f_resolution(m, f, cutoff - 1), f, "F-resolution of " + rq.module);
        out.report["pd_f"] = dim_json(pd_f(m, f, cutoff));
    } else if (rq.sub == "ext") {
        const auto& x = need_module(pr, rq.module, "--module");
        const auto& y = need_module(pr, rq.with, "--with");
        if (rq.degree < 0) throw input_error("--degree", "must be nonnegative");
        auto e = ext_f(x, y, static_cast<std::size_t>(rq.degree), f);
        out.lines.push_back("dim Ext_F^" + std::to_string(rq.degree) + "(" + rq.module + ", " + rq.with + ") = " + std::to_string(e));
        out.report = {{"degree", rq.degree}, {"dim", e}};
    } else if (rq.sub == "ifset") {
        auto inj = relative_injectives(f, pr.corpus);
        auto& t = out.table("I(F)", {"member", "dims", "as"});
        std::vector<std::string> names;
        json ms = json::array();
        // injectives of Λ first, sorted by file name, then the D Tr members in generator order
        std::vector<std::pair<NamedModule<F>, std::string>> rows;
        for (const auto& m : inj.members) rows.emplace_back(m, pr.name_of(m.module).value_or(m.name));
        std::stable_partition(rows.begin(), rows.end(), [](const auto& r) { return r.first.name.rfind("I", 0) == 0; });
        auto n_inj = static_cast<std::ptrdiff_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.first.name.rfind("I", 0) == 0; }));
        std::stable_sort(rows.begin(), rows.begin() + n_inj, [](const auto& a, const auto& b) { return a.second < b.second; });
        for (const auto& [m, n] : rows) {
            names.push_back(n);
            t.add({m.name, dims_text(m.module.dims()), n});
            ms.push_back({{"member", m.name}, {"name", n}, {"dims", m.module.dims()}});
        }
        out.lines.push_back(braces(names));
        for (const auto& msg : inj.failures) out.lines.push_back("validation failed: " + msg);
        if (!inj.validated) out.fail();
        out.report = {{"members", ms}, {"set", names}, {"validated", inj.validated}, {"failures", inj.failures}};
    } else if (rq.sub == "gldim") {
        add_dimension<F>(out, gldim_f(pr.corpus, f, cutoff));
    } else if (rq.sub == "fd") {
        add_dimension<F>(out, findim_f(pr.corpus, f, cutoff));
    } else if (rq.sub == "fexact") {
        const auto& x = need_complex(pr, rq.complex, "--complex");
        if (x.empty() || x.hi() - x.lo() != 2) throw input_error("--complex", "expected a complex with three terms");
        ShortExactSeq<F> ses{x.d(x.lo()), x.d(x.lo() + 1)};
        bool exact = ses.is_exact(), fex = exact && is_f_exact(ses, f);
        out.lines.push_back(std::string("exact: ") + (exact ? "yes" : "no"));
        out.lines.push_back(std::string("F-exact: ") + (fex ? "yes" : "no"));
        out.report = {{"exact", exact}, {"f_exact", fex}};
    } else {
        throw input_error("relhom", "unknown subcommand '" + rq.sub + "'");
    }
    return out;
}

template <ExactField F>
Output cmd_complex(const Problem<F>& pr, const Request& rq) {
    Output out;
    const auto& x = need_complex(pr, rq.complex, "--complex");
    if (rq.sub == "termlength") {
        auto n = term_length(x);
        out.lines.push_back(std::to_string(n));
        out.report = {{"complex", rq.complex}, {"term_length", n}};
    } else if (rq.sub == "normalize") {
        auto r = radical_normalize(x);
        complex_table(out, pr, r, "radical normalization of " + rq.complex);
        out.report["term_length"] = term_length(x);
    } else if (rq.sub == "homk" || rq.sub == "homdf") {
        const auto& y = need_complex(pr, rq.with, "--with");
        std::size_t d = 0;
        if (rq.sub == "homk") {
            d = hom_k(x, y, rq.shift).dim();
        } else {
            d = hom_df(x, y, rq.shift, pr.structure());
        }
        auto label = rq.sub == "homk" ? "Hom_K" : "Hom_DF";
        out.lines.push_back(std::string("dim ") + label + "(" + rq.complex + ", " + rq.with + "[" + std::to_string(rq.shift) + "]) = " + std::to_string(d));
        out.report = {{"kind", rq.sub}, {"shift", rq.shift}, {"dim", d}};
    } else if (rq.sub == "acyclic") {
        const auto& f = pr.structure();
        bool a = is_f_acyclic(x, f), b = is_f_acyclic_definitional(x, f);
        out.lines.push_back(std::string("F-acyclic: ") + (a ? "yes" : "no"));
        if (a != b) {
            out.lines.push_back("the two acyclicity tests disagree");
            out.fail();
        }
        out.report = {{"f_acyclic", a}, {"definitional", b}};
    } else if (rq.sub == "cone") {
        const auto& y = need_complex(pr, rq.with, "--with");
        auto h = hom_k(x, y, 0);
        if (rq.map >= h.dim())
            throw input_error("--map", "Hom_K has dimension " + std::to_string(h.dim()) + ", no basis map " + std::to_string(rq.map));
        auto c = radical_normalize(cone(h.basis[rq.map]).complex);
        complex_table(out, pr, c, "cone of basis map " + std::to_string(rq.map) + " (normalized)");
        bool q = is_f_quasi_iso(h.basis[rq.map], pr.structure());
        out.lines.push_back(std::string("F-quasi-isomorphism: ") + (q ? "yes" : "no"));
        out.report["f_quasi_iso"] = q;
    } else {
        throw input_error("complex", "unknown subcommand '" + rq.sub + "'");
    }
    return out;
}

template <ExactField F>
Output cmd_tilting(const Problem<F>& pr) {
    Output out;
    auto parts = pr.tilting_parts();
    auto r = verify_f_tilting(parts, pr.structure(), pr.witnesses, pr.declared_count);
    auto& so = out.table("self-orthogonality", {"i", "dim Hom_K(T, T[i])"});
    json sj = json::array();
    for (const auto& [i, d] : r.self_orthogonal) {
        so.add({std::to_string(i), std::to_string(d)});
        sj.push_back({{"i", i}, {"dim", d}});
    }
    auto& sl = out.table("summands", {"summand", "End"});
    for (const auto& [n, s] : r.summand_local) sl.add({n, s});
    json wj = json::array();
    if (!r.witnesses.empty()) {
        auto& w = out.table("witnesses", {"step", "valid", "produced", "detail"});
        for (const auto& x : r.witnesses) {
            w.add({x.name, x.valid ? "yes" : "no", braces(x.produced), x.detail});
            wj.push_back({{"name", x.name}, {"valid", x.valid}, {"produced", x.produced}, {"detail", x.detail}});
        }
    }
    auto gamma = end_algebra(pr.alg, parts);
    auto top = top_report(gamma.algebra);
    auto& s = out.table("summary", {"item", "value"});
    s.add({"terms in add G", r.in_add_g ? "yes" : "no"});
    s.add({"self-orthogonal", r.orthogonal ? "yes" : "no"});
    s.add({"term length", std::to_string(r.term_length)});
    s.add({"summand count", std::to_string(r.declared_count) + " (|ind P(F)| = " + std::to_string(r.pf_count) + ")"});
    s.add({"generation", r.generation});
    s.add({"generated", braces({r.generated.begin(), r.generated.end()})});
    s.add({"dim End", std::to_string(gamma.dim())});
    s.add({"dim End/rad", std::to_string(top.top_dim) + " (" + to_string(top.status) + ")"});
    for (const auto& m : r.failures) out.lines.push_back("failed: " + m);
    if (!r.passed()) out.fail();
    json products = json::array();
    for (const auto& row : gamma.products) {
        json jr = json::array();
        for (const auto& v : row) {
            json c = json::array();
            for (const auto& e : v) c.push_back(e.str());
            jr.push_back(c);
        }
        products.push_back(jr);
    }
    out.report = {{"passed", r.passed()},
                  {"in_add_g", r.in_add_g},
                  {"self_orthogonal", sj},
                  {"orthogonal", r.orthogonal},
                  {"term_length", r.term_length},
                  {"declared_count", r.declared_count},
                  {"pf_count", r.pf_count},
                  {"count_ok", r.count_ok},
                  {"generation", r.generation},
                  {"generated", r.generated},
                  {"witnesses", wj},
                  {"failures", r.failures},
                  {"end_algebra", {{"dim", gamma.dim()}, {"top_dim", top.top_dim}, {"split", to_string(top.status)}, {"products", products}}}};
    return out;
}

template <ExactField F>
Output cmd_bounds(const Problem<F>& pr, const Request& rq, std::size_t cutoff) {
    std::vector<std::string> which;
    if (rq.sub == "all") {
        which = pr.checks.empty() ? std::vector<std::string>{"theorem73", "cor710", "counts", "gorenstein"} : pr.checks;
    } else {
        which = {rq.sub};
    }
    auto in = quadruple(pr, cutoff);
    Output out;
    json reports = json::array();
    for (const auto& w : which) {
        Output one;
        if (w == "theorem73") {
            add_bounds(one, theorem73_check(in));
        } else if (w == "cor710") {
            if (!in.f.is_ordinary()) {
                if (rq.sub != "all") throw input_error("generator", "cor710 needs the regular generator");
                out.lines.push_back("cor710 skipped: the generator is not the regular module");
                continue;
            }
            add_bounds(one, corollary710_check(in));
        } else if (w == "counts") {
            add_bounds(one, prop63_64_counts(in));
        } else if (w == "gorenstein") {
            add_bounds(one, gorenstein_check(in));
        } else {
            throw input_error("bounds", "unknown check '" + w + "'");
        }
        for (auto& t : one.tables) out.tables.push_back(std::move(t));
        for (auto& l : one.lines) out.lines.push_back(std::move(l));
        out.status = std::max(out.status, one.status);
        reports.push_back(one.report);
    }
    out.report = rq.sub == "all" ? json{{"reports", reports}} : (reports.empty() ? json::object() : reports[0]);
    return out;
}

}  // namespace detail

template <ExactField F>
Output execute(const Problem<F>& pr, const Request& rq) {
    const auto cutoff = rq.cutoff.value_or(pr.cutoff);
    if (cutoff == 0) throw input_error("--cutoff", "must be positive");
    Output out;
    try {
        if (rq.command == "algebra") out = detail::cmd_algebra(pr);
        else if (rq.command == "module") out = detail::cmd_module(pr, rq, cutoff);
        else if (rq.command == "relhom") out = detail::cmd_relhom(pr, rq, cutoff);
        else if (rq.command == "complex") out = detail::cmd_complex(pr, rq);
        else if (rq.command == "tilting") out = detail::cmd_tilting(pr);
        else if (rq.command == "bounds") out = detail::cmd_bounds(pr, rq, cutoff);
        else throw input_error("", "unknown command '" + rq.command + "'");
    } catch (const std::invalid_argument& e) {
        throw input_error(rq.command, e.what());
    }
    out.report["command"] = rq.sub.empty() ? rq.command : rq.command + " " + rq.sub;
    out.report["field"] = pr.field.name();
    out.report["cutoff"] = cutoff;
    out.report["exit_status"] = out.status;
    return out;
}

/// Loads the file and runs the request; `format` is handled here too.
inline Output run(const Request& rq) {
    auto doc = read_json(rq.file);
    if (rq.command == "format") {
        Output out;
        auto text = canonical_text(doc);
        if (rq.check_only) {
            std::ifstream in(rq.file);
            std::stringstream ss;
            ss << in.rdbuf();
            bool same = ss.str() == text;
            out.lines.push_back(same ? "canonical" : "not canonical");
            if (!same) out.fail();
            out.report = {{"canonical", same}};
        } else {
            out.lines.push_back(text.substr(0, text.size() - 1));
            out.report = canonicalize(doc);
        }
        return out;
    }
    auto choice = FieldChoice::parse(rq.field.value_or(doc.value("field", std::string("q"))));
    if (choice.p == 0) return execute(load_problem(doc, RationalField{}), rq);
    return execute(load_problem(doc, PrimeField(choice.p)), rq);
}

/// Runs a request and maps the outcome to an exit status: 0 when nothing was
/// violated, 2 for a violated check or failed validation, 1 for bad input.
inline int dispatch(const Request& rq, std::ostream& out, std::ostream& err, const std::string& report_path = {},
                    bool quiet = false) {
    try {
        auto o = run(rq);
        if (!quiet) o.print(out);
        if (!report_path.empty()) {
            std::ofstream f(report_path);
            if (!f) throw input_error("--report", "cannot write " + report_path);
            f << o.report.dump(2) << '\n';
        }
        return o.status;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << '\n';
    } catch (const undeterminable_error& e) {
        err << "undeterminable: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 1;
}

}  // namespace relhom::cli

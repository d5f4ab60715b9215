#pragma once

// Problem files: JSON with a schema version, an algebra, named modules, a
// generator, complexes and tilting data.  See README.md for the format.

#include "relhom/bounds/bounds.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace relhom::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Bad input; `where` names the offending field.
class input_error : public std::runtime_error {
public:
    input_error(const std::string& where, const std::string& what)
        : std::runtime_error(where.empty() ? what : where + ": " + what) {}
};

inline json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path, "cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path, e.what());
    }
}

/// "q" or "fp:P".
struct FieldChoice {
    std::uint64_t p = 0;
    static FieldChoice parse(const std::string& s) {
        if (s == "q") return {0};
        if (s.rfind("fp:", 0) == 0) {
            std::uint64_t p = 0;
            try {
                p = std::stoull(s.substr(3));
            } catch (const std::exception&) {
                throw input_error("field", "bad prime in '" + s + "'");
            }
            if (!PrimeField::is_prime(p)) throw input_error("field", std::to_string(p) + " is not prime");
            return {p};
        }
        throw input_error("field", "expected \"q\" or \"fp:P\", got '" + s + "'");
    }
};

namespace detail {

inline std::string scalar_text(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw input_error(where, "expected an integer or a string \"a/b\"");
}

inline std::string canonical_scalar(const json& v, const std::string& where) {
    try {
        return Rational::parse(scalar_text(v, where)).str();
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error(where, "not a rational number");
    }
}

inline json canonical_matrix(const json& m, const std::string& where) {
    json out = json::array();
    if (!m.is_array()) throw input_error(where, "expected a list of rows");
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (!m[r].is_array()) throw input_error(where + "[" + std::to_string(r) + "]", "expected a row");
        json row = json::array();
        for (std::size_t c = 0; c < m[r].size(); ++c)
            row.push_back(canonical_scalar(m[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
        out.push_back(std::move(row));
    }
    return out;
}

inline json canonical_entry(const json& e, const std::string& where) {
    if (e.is_number_integer() && e.get<long long>() == 0) return 0;
    if (!e.is_object()) throw input_error(where, "expected 0, {\"hom\": [...]} or {\"vertices\": [...]}");
    json out = e;
    if (e.contains("hom")) {
        json h = json::array();
        for (std::size_t k = 0; k < e["hom"].size(); ++k)
            h.push_back(canonical_scalar(e["hom"][k], where + ".hom[" + std::to_string(k) + "]"));
        out["hom"] = h;
    }
    if (e.contains("vertices")) {
        json v = json::array();
        for (std::size_t k = 0; k < e["vertices"].size(); ++k)
            v.push_back(canonical_matrix(e["vertices"][k], where + ".vertices[" + std::to_string(k) + "]"));
        out["vertices"] = v;
    }
    return out;
}

}  // namespace detail

/// Same document with every coefficient written as a canonical rational string.
/// Keys come out sorted, so dump() of the result is a canonical form.
inline json canonicalize(const json& doc) {
    json out = doc;
    if (doc.contains("relations"))
        for (std::size_t r = 0; r < doc["relations"].size(); ++r)
            for (std::size_t t = 0; t < doc["relations"][r].size(); ++t) {
                auto where = "relations[" + std::to_string(r) + "][" + std::to_string(t) + "]";
                const auto& term = doc["relations"][r][t];
                if (term.contains("coeff")) out["relations"][r][t]["coeff"] = detail::canonical_scalar(term["coeff"], where + ".coeff");
            }
    if (doc.contains("modules"))
        for (auto& [name, m] : doc["modules"].items())
            if (m.contains("arrows"))
                for (auto& [a, mat] : m["arrows"].items())
                    out["modules"][name]["arrows"][a] = detail::canonical_matrix(mat, "modules." + name + ".arrows." + a);
    if (doc.contains("complexes"))
        for (auto& [name, c] : doc["complexes"].items())
            if (c.contains("differentials"))
                for (std::size_t k = 0; k < c["differentials"].size(); ++k)
                    for (std::size_t r = 0; r < c["differentials"][k].size(); ++r)
                        for (std::size_t s = 0; s < c["differentials"][k][r].size(); ++s)
                            out["complexes"][name]["differentials"][k][r][s] = detail::canonical_entry(
                                c["differentials"][k][r][s], "complexes." + name + ".differentials[" + std::to_string(k) + "][" +
                                                                  std::to_string(r) + "][" + std::to_string(s) + "]");
    if (doc.contains("tilting") && doc["tilting"].contains("witnesses"))
        for (std::size_t w = 0; w < doc["tilting"]["witnesses"].size(); ++w) {
            const auto& wit = doc["tilting"]["witnesses"][w];
            if (!wit.contains("coefficients")) continue;
            json c = json::array();
            for (std::size_t k = 0; k < wit["coefficients"].size(); ++k)
                c.push_back(detail::canonical_scalar(wit["coefficients"][k], "tilting.witnesses[" + std::to_string(w) + "]"));
            out["tilting"]["witnesses"][w]["coefficients"] = c;
        }
    return out;
}

inline std::string canonical_text(const json& doc) { return canonicalize(doc).dump(2) + "\n"; }

template <ExactField F>
struct Problem {
    using value_type = typename F::value_type;

    F field;
    AlgebraPtr<F> alg;
    std::vector<std::string> module_names;  // sorted
    std::map<std::string, Representation<F>> modules;
    std::optional<SubbifunctorF<F>> f;
    std::vector<NamedModule<F>> corpus;
    std::map<std::string, LComplex<F>> complexes;
    std::vector<std::string> tilting_summands;
    std::optional<std::size_t> declared_count;
    std::vector<WitnessStep<F>> witnesses;
    std::vector<std::string> checks;
    std::size_t cutoff = 10;

    [[nodiscard]] const Representation<F>& module(const std::string& name) const {
        auto it = modules.find(name);
        if (it == modules.end()) throw input_error("", "unknown module '" + name + "'");
        return it->second;
    }
    [[nodiscard]] const LComplex<F>& complex(const std::string& name) const {
        auto it = complexes.find(name);
        if (it == complexes.end()) throw input_error("", "unknown complex '" + name + "'");
        return it->second;
    }
    [[nodiscard]] const SubbifunctorF<F>& structure() const {
        if (!f) throw input_error("generator", "this command needs a generator");
        return *f;
    }
    [[nodiscard]] std::vector<TiltingSummand<F>> tilting_parts() const {
        if (tilting_summands.empty()) throw input_error("tilting", "no tilting complex declared");
        std::vector<TiltingSummand<F>> out;
        for (const auto& n : tilting_summands) out.push_back({n, complex(n)});
        return out;
    }
    /// The file's name for a module isomorphic to m, if any.
    /// Generator summands are tried first, then the corpus, then the other modules.
    [[nodiscard]] std::optional<std::string> name_of(const Representation<F>& m) const {
        std::vector<std::string> order;
        if (f)
            for (const auto& s : f->summands()) order.push_back(s.name);
        for (const auto& c : corpus) order.push_back(c.name);
        order.insert(order.end(), module_names.begin(), module_names.end());
        for (const auto& n : order) {
            auto it = modules.find(n);
            if (it != modules.end() && it->second.dims() == m.dims() && is_isomorphic(it->second, m)) return n;
        }
        return std::nullopt;
    }
};

namespace detail {

template <ExactField F>
typename F::value_type scalar(const F& field, const json& v, const std::string& where) {
    try {
        return field.parse(scalar_text(v, where));
    } catch (const input_error&) {
        throw;
    } catch (const std::exception& e) {
        throw input_error(where, std::string("bad scalar: ") + e.what());
    }
}

template <ExactField F>
Matrix<F> matrix(const F& field, const json& m, std::size_t rows, std::size_t cols, const std::string& where) {
    Matrix<F> out(field, rows, cols);
    if (!m.is_array()) throw input_error(where, "expected a list of rows");
    if (m.empty() && (rows == 0 || cols == 0)) return out;
    if (m.size() != rows) throw input_error(where, "expected " + std::to_string(rows) + " rows, got " + std::to_string(m.size()));
    for (std::size_t r = 0; r < rows; ++r) {
        if (!m[r].is_array() || m[r].size() != cols)
            throw input_error(where + "[" + std::to_string(r) + "]", "expected " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) out(r, c) = scalar(field, m[r][c], where);
    }
    return out;
}

inline std::size_t vertex_index(const json& v, std::size_t n, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 1 || static_cast<std::size_t>(v.get<long long>()) > n)
        throw input_error(where, "expected a vertex between 1 and " + std::to_string(n));
    return static_cast<std::size_t>(v.get<long long>()) - 1;
}

template <ExactField F>
AlgebraPtr<F> build_algebra(const F& field, const json& doc) {
    if (!doc.contains("quiver")) throw input_error("quiver", "missing");
    const auto& q = doc["quiver"];
    if (!q.contains("vertices") || !q["vertices"].is_number_integer() || q["vertices"].get<long long>() < 1)
        throw input_error("quiver.vertices", "expected a positive integer");
    const auto n = static_cast<std::size_t>(q["vertices"].get<long long>());
    std::vector<Arrow> arrows;
    if (q.contains("arrows"))
        for (std::size_t k = 0; k < q["arrows"].size(); ++k) {
            const auto& a = q["arrows"][k];
            auto where = "quiver.arrows[" + std::to_string(k) + "]";
            if (!a.contains("name") || !a["name"].is_string()) throw input_error(where, "arrow needs a name");
            arrows.push_back({a["name"].get<std::string>(), vertex_index(a.value("from", json()), n, where + ".from"),
                              vertex_index(a.value("to", json()), n, where + ".to")});
        }
    Quiver quiver;
    try {
        quiver = Quiver(n, arrows);
    } catch (const std::invalid_argument& e) {
        throw input_error("quiver", e.what());
    }
    std::vector<Relation<F>> rels;
    if (doc.contains("relations"))
        for (std::size_t r = 0; r < doc["relations"].size(); ++r) {
            Relation<F> rel;
            for (std::size_t t = 0; t < doc["relations"][r].size(); ++t) {
                const auto& term = doc["relations"][r][t];
                auto where = "relations[" + std::to_string(r) + "][" + std::to_string(t) + "]";
                Path p;
                if (term.contains("vertex")) {
                    p.start = vertex_index(term["vertex"], n, where + ".vertex");
                } else {
                    if (!term.contains("path") || !term["path"].is_array() || term["path"].empty())
                        throw input_error(where, "term needs a nonempty path or a vertex");
                    for (const auto& a : term["path"]) {
                        if (!a.is_string()) throw input_error(where + ".path", "arrow names are strings");
                        try {
                            p.arrows.push_back(quiver.arrow_index(a.get<std::string>()));
                        } catch (const std::invalid_argument& e) {
                            throw input_error(where + ".path", e.what());
                        }
                    }
                    p.start = quiver.arrow(p.arrows.front()).source;
                    for (std::size_t k = 1; k < p.arrows.size(); ++k)
                        if (quiver.arrow(p.arrows[k]).source != quiver.arrow(p.arrows[k - 1]).target)
                            throw input_error(where + ".path", "arrows do not compose");
                }
                rel.push_back({term.contains("coeff") ? scalar(field, term["coeff"], where + ".coeff") : field.one(), p});
            }
            rels.push_back(std::move(rel));
        }
    if (!doc.contains("nilpotency") || !doc["nilpotency"].is_number_integer())
        throw input_error("nilpotency", "expected an integer bound on path length");
    try {
        return PathAlgebra<F>::build(field, quiver, rels, static_cast<std::size_t>(doc["nilpotency"].get<long long>()));
    } catch (const std::invalid_argument& e) {
        throw input_error("relations", e.what());
    }
}

template <ExactField F>
void build_modules(Problem<F>& pr, const json& doc) {
    if (!doc.contains("modules")) return;
    const auto& specs = doc["modules"];
    const auto n = pr.alg->vertex_count();
    std::set<std::string> active;
    std::function<Representation<F>(const std::string&)> get = [&](const std::string& name) -> Representation<F> {
        if (auto it = pr.modules.find(name); it != pr.modules.end()) return it->second;
        if (!specs.contains(name)) throw input_error("modules", "unknown module '" + name + "'");
        if (!active.insert(name).second) throw input_error("modules." + name, "circular definition");
        const auto& s = specs[name];
        const auto where = "modules." + name;
        auto ref = [&](const char* key) {
            if (!s[key].is_string()) throw input_error(where + "." + key, "expected a module name");
            return get(s[key].get<std::string>());
        };
        Representation<F> m;
        try {
            if (s.contains("projective")) m = projective(pr.alg, vertex_index(s["projective"], n, where + ".projective"));
            else if (s.contains("injective")) m = injective(pr.alg, vertex_index(s["injective"], n, where + ".injective"));
            else if (s.contains("simple")) m = simple(pr.alg, vertex_index(s["simple"], n, where + ".simple"));
            else if (s.contains("radical")) m = radical(ref("radical")).module;
            else if (s.contains("socle")) m = socle(ref("socle")).module;
            else if (s.contains("top")) m = top(ref("top")).module;
            else if (s.contains("quotient_by_socle")) m = quotient_by_socle(ref("quotient_by_socle"));
            else if (s.contains("dtr")) m = dtr(ref("dtr"));
            else if (s.contains("sum")) {
                std::vector<Representation<F>> parts;
                for (const auto& p : s["sum"]) parts.push_back(get(p.get<std::string>()));
                m = direct_sum(pr.alg, parts).sum;
            } else if (s.contains("dims")) {
                auto dims = s["dims"].get<std::vector<std::size_t>>();
                if (dims.size() != n) throw input_error(where + ".dims", "expected " + std::to_string(n) + " entries");
                std::vector<Matrix<F>> maps;
                const auto& q = pr.alg->quiver();
                for (const auto& a : q.arrows()) {
                    auto rows = dims[a.target], cols = dims[a.source];
                    if (s.contains("arrows") && s["arrows"].contains(a.name))
                        maps.push_back(matrix(pr.field, s["arrows"][a.name], rows, cols, where + ".arrows." + a.name));
                    else
                        maps.emplace_back(pr.field, rows, cols);
                }
                m = Representation<F>(pr.alg, dims, std::move(maps));
            } else {
                throw input_error(where, "unknown module constructor");
            }
        } catch (const input_error&) {
            throw;
        } catch (const std::exception& e) {
            throw input_error(where, e.what());
        }
        active.erase(name);
        pr.modules.emplace(name, m);
        return m;
    };
    for (auto& [name, _] : specs.items()) {
        get(name);
        pr.module_names.push_back(name);
    }
}

template <ExactField F>
ModuleMap<F> block_entry(const Problem<F>& pr, const json& e, const Representation<F>& s, const Representation<F>& t,
                         const std::string& where) {
    if (e.is_number_integer() && e.get<long long>() == 0) return ModuleMap<F>::zero(s, t);
    if (!e.is_object()) throw input_error(where, "expected 0, {\"hom\": [...]} or {\"vertices\": [...]}");
    if (e.contains("hom")) {
        auto h = hom_space(s, t);
        if (e["hom"].size() != h.dim())
            throw input_error(where + ".hom", "Hom space has dimension " + std::to_string(h.dim()) + ", got " +
                                                  std::to_string(e["hom"].size()) + " coefficients");
        std::vector<typename F::value_type> c;
        for (const auto& v : e["hom"]) c.push_back(scalar(pr.field, v, where + ".hom"));
        return h.combine(c);
    }
    if (e.contains("vertices")) {
        const auto& v = e["vertices"];
        if (v.size() != s.vertex_count()) throw input_error(where + ".vertices", "one matrix per vertex expected");
        std::vector<Matrix<F>> comps;
        for (std::size_t k = 0; k < v.size(); ++k)
            comps.push_back(matrix(pr.field, v[k], t.dim(k), s.dim(k), where + ".vertices[" + std::to_string(k) + "]"));
        try {
            return ModuleMap<F>(s, t, std::move(comps));
        } catch (const std::exception& ex) {
            throw input_error(where, ex.what());
        }
    }
    throw input_error(where, "expected \"hom\" or \"vertices\"");
}

template <ExactField F>
void build_complexes(Problem<F>& pr, const json& doc) {
    if (!doc.contains("complexes")) return;
    for (auto& [name, c] : doc["complexes"].items()) {
        const auto where = "complexes." + name;
        if (!c.contains("terms") || !c["terms"].is_array()) throw input_error(where + ".terms", "expected a list of terms");
        int lo = c.value("lo", 0);
        std::vector<std::vector<Representation<F>>> blocks;
        std::vector<Representation<F>> terms;
        for (std::size_t k = 0; k < c["terms"].size(); ++k) {
            std::vector<Representation<F>> bl;
            for (const auto& b : c["terms"][k]) {
                if (!b.is_string()) throw input_error(where + ".terms", "blocks are module names");
                auto it = pr.modules.find(b.template get<std::string>());
                if (it == pr.modules.end()) throw input_error(where + ".terms", "unknown module '" + b.template get<std::string>() + "'");
                bl.push_back(it->second);
            }
            terms.push_back(direct_sum(pr.alg, bl).sum);
            blocks.push_back(std::move(bl));
        }
        std::vector<ModuleMap<F>> diffs;
        const json none = json::array();
        const auto& ds = c.contains("differentials") ? c["differentials"] : none;
        if (!ds.empty() && ds.size() + 1 != terms.size())
            throw input_error(where + ".differentials", "expected " + std::to_string(terms.empty() ? 0 : terms.size() - 1) + " differentials");
        for (std::size_t k = 0; k + 1 < terms.size(); ++k) {
            auto src = direct_sum(pr.alg, blocks[k]), tgt = direct_sum(pr.alg, blocks[k + 1]);
            auto d = ModuleMap<F>::zero(src.sum, tgt.sum);
            if (!ds.empty()) {
                const auto& mat = ds[k];
                auto dwhere = where + ".differentials[" + std::to_string(k) + "]";
                if (!mat.is_array() || mat.size() != blocks[k + 1].size())
                    throw input_error(dwhere, "expected one row per target block (" + std::to_string(blocks[k + 1].size()) + ")");
                for (std::size_t r = 0; r < blocks[k + 1].size(); ++r) {
                    if (!mat[r].is_array() || mat[r].size() != blocks[k].size())
                        throw input_error(dwhere, "expected one entry per source block (" + std::to_string(blocks[k].size()) + ")");
                    for (std::size_t s = 0; s < blocks[k].size(); ++s) {
                        auto e = block_entry(pr, mat[r][s], blocks[k][s], blocks[k + 1][r],
                                             dwhere + "[" + std::to_string(r) + "][" + std::to_string(s) + "]");
                        d = d + tgt.injections[r] * e * src.projections[s];
                    }
                }
            }
            diffs.push_back(std::move(d));
        }
        try {
            pr.complexes.emplace(name, LComplex<F>(pr.alg, lo, std::move(terms), std::move(diffs), std::move(blocks)));
        } catch (const std::invalid_argument& e) {
            throw input_error(where, e.what());
        }
    }
}

inline std::vector<std::pair<std::string, int>> shifted_list(const json& v, const std::string& where) {
    std::vector<std::pair<std::string, int>> out;
    if (!v.is_array()) throw input_error(where, "expected a list of [name, shift] pairs");
    for (const auto& e : v) {
        if (e.is_string())
            out.emplace_back(e.get<std::string>(), 0);
        else if (e.is_array() && e.size() == 2 && e[0].is_string() && e[1].is_number_integer())
            out.emplace_back(e[0].get<std::string>(), e[1].get<int>());
        else
            throw input_error(where, "expected a name or a [name, shift] pair");
    }
    return out;
}

}  // namespace detail

template <ExactField F>
Problem<F> load_problem(const json& doc, F field) {
    if (!doc.is_object()) throw input_error("", "a problem file is a JSON object");
    if (!doc.contains("schema") || doc["schema"] != kSchemaVersion)
        throw input_error("schema", "expected schema version " + std::to_string(kSchemaVersion));
    Problem<F> pr{field, detail::build_algebra(field, doc), {}, {}, std::nullopt, {}, {}, {}, std::nullopt, {}, {}, 10};
    detail::build_modules(pr, doc);
    if (doc.contains("generator")) {
        const auto& g = doc["generator"];
        try {
            if (g == "regular") {
                pr.f = SubbifunctorF<F>::ordinary(pr.alg);
            } else {
                std::vector<Summand<F>> s;
                for (const auto& n : g) s.push_back({n.get<std::string>(), pr.module(n.get<std::string>()), 1});
                pr.f = SubbifunctorF<F>(pr.alg, std::move(s));
            }
        } catch (const std::exception& e) {
            throw input_error("generator", e.what());
        }
    }
    if (doc.contains("corpus")) {
        for (const auto& n : doc["corpus"]) {
            if (!n.is_string()) throw input_error("corpus", "expected module names");
            if (!pr.modules.count(n.get<std::string>())) throw input_error("corpus", "unknown module '" + n.get<std::string>() + "'");
            pr.corpus.push_back({n.get<std::string>(), pr.modules.at(n.get<std::string>())});
        }
    } else {
        for (const auto& n : pr.module_names) pr.corpus.push_back({n, pr.modules.at(n)});
    }
    detail::build_complexes(pr, doc);
    if (doc.contains("tilting")) {
        const auto& t = doc["tilting"];
        if (!t.contains("summands")) throw input_error("tilting.summands", "missing");
        for (const auto& n : t["summands"]) {
            if (!pr.complexes.count(n.get<std::string>()))
                throw input_error("tilting.summands", "unknown complex '" + n.get<std::string>() + "'");
            pr.tilting_summands.push_back(n.get<std::string>());
        }
        if (t.contains("declared_count")) pr.declared_count = t["declared_count"].get<std::size_t>();
        if (t.contains("witnesses"))
            for (std::size_t k = 0; k < t["witnesses"].size(); ++k) {
                const auto& w = t["witnesses"][k];
                auto where = "tilting.witnesses[" + std::to_string(k) + "]";
                WitnessStep<F> step{w.value("name", "W" + std::to_string(k + 1)), detail::shifted_list(w.value("source", json()), where + ".source"),
                                    detail::shifted_list(w.value("target", json()), where + ".target"), {}, std::nullopt};
                if (w.contains("expect")) step.expect = w["expect"].get<std::vector<std::string>>();
                if (w.contains("coefficients")) {
                    std::vector<typename F::value_type> c;
                    for (const auto& v : w["coefficients"]) c.push_back(detail::scalar(field, v, where + ".coefficients"));
                    step.coefficients = std::move(c);
                }
                pr.witnesses.push_back(std::move(step));
            }
    }
    if (doc.contains("checks")) pr.checks = doc["checks"].get<std::vector<std::string>>();
    if (doc.contains("cutoff")) pr.cutoff = doc["cutoff"].get<std::size_t>();
    return pr;
}

}  // namespace relhom::cli

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    using namespace relhom::cli;
    CLI::App app{"Relative homological algebra over quiver algebras"};
    app.require_subcommand(1);
    Request rq;
    std::string report_path;
    bool quiet = false;

    auto common = [&](CLI::App* c) {
        c->add_option("file", rq.file, "problem file")->required()->check(CLI::ExistingFile);
        c->add_option("--cutoff", rq.cutoff, "search cutoff for dimensions (default 10)");
        c->add_option("--field", rq.field, "q or fp:P, overriding the file");
        c->add_option("--report", report_path, "write a JSON report here");
        c->add_flag("--quiet", quiet, "suppress the table output");
    };
    auto with_subs = [&](const std::string& name, const std::string& help, std::vector<std::string> subs) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("action", rq.sub, "one of: " + join(subs, ", "))->required()->check(CLI::IsMember(subs));
        common(c);
        return c;
    };

    common(app.add_subcommand("algebra", "basis and projective/injective dimension vectors"));
    auto* mod = with_subs("module", "ordinary module computations", {"dims", "resolve", "ext"});
    auto* rel = with_subs("relhom", "relative homological algebra for the generator", {"resolve", "ext", "ifset", "gldim", "fd", "fexact"});
    auto* cx = with_subs("complex", "complexes of modules", {"termlength", "normalize", "homk", "homdf", "acyclic", "cone"});
    common(app.add_subcommand("tilting", "verify the declared tilting complex and describe its endomorphism algebra"));
    with_subs("bounds", "dimension inequalities", {"theorem73", "cor710", "counts", "gorenstein", "all"});
    auto* fmt = app.add_subcommand("format", "print the canonical form of a problem file");
    fmt->add_option("file", rq.file, "problem file")->required()->check(CLI::ExistingFile);
    fmt->add_flag("--check", rq.check_only, "exit 2 unless the file is already canonical");

    for (auto* c : {mod, rel}) {
        c->add_option("--module", rq.module, "module name");
        c->add_option("--with", rq.with, "second module name");
        c->add_option("--degree", rq.degree, "Ext degree (default 1)");
    }
    rel->add_option("--complex", rq.complex, "three-term complex read as a short exact sequence");
    cx->add_option("--complex", rq.complex, "complex name");
    cx->add_option("--with", rq.with, "second complex name");
    cx->add_option("--shift", rq.shift, "degree shift n in Hom(X, Y[n])");
    cx->add_option("--map", rq.map, "index of the Hom_K basis map for cone");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    rq.command = app.get_subcommands().front()->get_name();

    return dispatch(rq, std::cout, std::cerr, report_path, quiet);
}

#include <CLI11.hpp>
#include <iostream>

#include "agcodes/cli.hpp"
#include "agcodes/errors.hpp"

namespace {

void add_field_options(CLI::App* sc, agcodes::RunConfig& cfg) {
    sc->add_option("--p", cfg.p, "curve parameter / characteristic (prime, p = 3 mod 4, p > 3)");
    sc->add_option("--ext", cfg.ext, "field extension degree over GF(p): 1 or 2");
}

void add_output_options(CLI::App* sc, agcodes::RunConfig& cfg) {
    sc->add_option("--format", cfg.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sc->add_flag("--list", cfg.list, "include full element/point listings");
}

void add_cap_options(CLI::App* sc, agcodes::RunConfig& cfg) {
    sc->add_option("--cap-closure", cfg.caps.closure, "max elements in group closures");
    sc->add_option("--cap-mindist", cfg.caps.mindist,
                   "max projective messages for exact minimum distance");
    sc->add_option("--cap-paut-n", cfg.caps.paut_n,
                   "max code length for the exhaustive permutation search");
}

void add_divisor_options(CLI::App* sc, agcodes::RunConfig& cfg) {
    sc->add_option("--base", cfg.base, "divisor base point: inf or x0=<element>");
    sc->add_option("--m", cfg.m, "divisor multiplicity");
}

void add_eval_options(CLI::App* sc, agcodes::RunConfig& cfg) {
    sc->add_option("--E", cfg.esel,
                   "evaluation points: all-minus-base, orbit-complement, or explicit")
        ->check(CLI::IsMember({"all-minus-base", "orbit-complement", "explicit"}));
    sc->add_option("--E-points", cfg.epoints, "explicit evaluation points 'x,y;x,y;...'");
}

}  // namespace

int main(int argc, char** argv) {
    agcodes::RunConfig cfg;
    try {
        cfg.caps = agcodes::caps_from_env();
    } catch (const agcodes::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"exact engine for evaluation codes on the curves y^2 = x^p - x"};
    app.require_subcommand(1);

    auto* points = app.add_subcommand("points", "enumerate the rational points");
    add_field_options(points, cfg);
    add_output_options(points, cfg);

    auto* aut = app.add_subcommand("aut", "enumerate the automorphism group");
    add_field_options(aut, cfg);
    add_output_options(aut, cfg);

    auto* orbits = app.add_subcommand("orbits", "orbit decomposition of the point set");
    add_field_options(orbits, cfg);
    add_output_options(orbits, cfg);
    orbits->add_option("--point", cfg.point, "also report this point's orbit and stabilizer");

    auto* stab = app.add_subcommand("stab", "stabilizer of a point");
    add_field_options(stab, cfg);
    add_output_options(stab, cfg);
    stab->add_option("--point", cfg.point, "point selector: inf or x0=<x>[,y=<y>]")->required();

    auto* rrbasis = app.add_subcommand("rrbasis", "basis of L(m * base)");
    add_field_options(rrbasis, cfg);
    add_divisor_options(rrbasis, cfg);
    add_output_options(rrbasis, cfg);

    auto* code = app.add_subcommand("code", "build the evaluation code");
    add_field_options(code, cfg);
    add_divisor_options(code, cfg);
    add_eval_options(code, cfg);
    add_output_options(code, cfg);
    add_cap_options(code, cfg);
    code->add_flag("--exact-d", cfg.exact_d, "compute the exact minimum distance");
    code->add_option("--out", cfg.out_path, "write the generator matrix file here");

    auto* paut = app.add_subcommand("paut", "exhaustive coordinate-permutation group of the code");
    add_field_options(paut, cfg);
    add_divisor_options(paut, cfg);
    add_eval_options(paut, cfg);
    add_output_options(paut, cfg);
    add_cap_options(paut, cfg);

    auto* rho = app.add_subcommand("rho", "transport curve automorphisms to code permutations");
    add_field_options(rho, cfg);
    add_divisor_options(rho, cfg);
    add_eval_options(rho, cfg);
    add_output_options(rho, cfg);
    rho->add_option("--a", cfg.a, "gamma2 parameter override (field element)");

    auto* verify = app.add_subcommand("verify", "run a built-in scenario and audit every value");
    add_field_options(verify, cfg);
    add_output_options(verify, cfg);
    add_cap_options(verify, cfg);
    verify->add_option("--example", cfg.example, "scenario: 1, 2, or remark2")->required();
    verify->add_option("--m", cfg.m, "divisor multiplicity (scenario 1)");

    auto* gv = app.add_subcommand("gv", "Gilbert-Varshamov comparison for [n,k,d] over GF(q)");
    add_output_options(gv, cfg);
    gv->add_option("n", cfg.gv_n, "length")->required();
    gv->add_option("k", cfg.gv_k, "dimension")->required();
    gv->add_option("d", cfg.gv_d, "minimum distance")->required();
    gv->add_option("q", cfg.gv_q, "field size")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    // verify scenario 2 pins its own m; scenario 1 defaults to 7
    if (cfg.command == "verify" && cfg.example == "1" && verify->count("--m") == 0) cfg.m = 7;
    if (cfg.command == "verify" && cfg.example == "remark2" && verify->count("--p") == 0)
        cfg.p = 11;

    const agcodes::CmdResult res = agcodes::run_command(cfg);
    std::cout << res.output;
    return res.exit_code;
}

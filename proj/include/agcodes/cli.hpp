#pragma once

#include <string>
#include <vector>

#include "agcodes/autcode.hpp"
#include "agcodes/code.hpp"
#include "agcodes/curve.hpp"
#include "agcodes/jsonio.hpp"
#include "agcodes/rr.hpp"

namespace agcodes {

struct Caps {
    i64 closure = 100000;
    i64 mindist = 10'000'000;
    int paut_n = 8;
};

/// Parse the AGC_CAPS environment override, "closure=N;mindist=N;paut=N"
/// (any subset, ';' or ',' separated), on top of the defaults.
Caps caps_from_env();

/// One fully parsed invocation. Configs round-trip through JSON.
struct RunConfig {
    std::string command;               // points aut orbits stab rrbasis code paut rho verify gv
    i64 p = 7;
    int ext = 1;
    std::string base = "inf";          // "inf" | "x0=<element>"
    i64 m = 5;
    std::string esel = "all-minus-base";  // | "orbit-complement" | "explicit"
    std::string epoints;               // explicit E: "x,y;x,y;..."
    std::string point;                 // orbits/stab selector: "inf" | "x0=<x>[,y=<y>]"
    std::string a;                     // gamma2 parameter override (element text)
    std::string example;               // verify scenario: "1" | "2" | "remark2"
    bool exact_d = false;
    bool list = false;                 // include full listings in text output
    std::string format = "text";       // "text" | "json"
    std::string out_path;              // code: write the matrix file here
    Caps caps = caps_from_env();
    i64 gv_n = 0, gv_k = 0, gv_d = 0, gv_q = 0;

    bool operator==(const RunConfig& o) const;
};

Json to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const Json& j);

struct CmdResult {
    int exit_code = 0;
    std::string output;
};

/// Dispatch a config to its command. Exit codes: 0 success, 1 pinned-check
/// mismatch, 2 invalid config, 3 cap exceeded.
CmdResult run_command(const RunConfig& cfg);

// Building blocks shared by the commands and the test suites.
Curve make_curve(const RunConfig& cfg);
CurvePoint resolve_point(const Curve& curve, const std::string& selector);
std::vector<CurvePoint> resolve_evaluation_points(const Curve& curve, const RunConfig& cfg,
                                                  const CurvePoint& base,
                                                  const std::vector<AutElement>& full_group);
ActionContext make_action_context(const RunConfig& cfg);

}  // namespace agcodes

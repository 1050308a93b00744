#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "agcodes/cli.hpp"
#include "agcodes/errors.hpp"
#include "schema_check.hpp"

using namespace agcodes;

namespace {

RunConfig base_config(const std::string& command) {
    RunConfig cfg;
    cfg.command = command;
    return cfg;
}

Json schema() {
    const char* dir = std::getenv("AGC_SCHEMA_DIR");
    const std::string path = std::string(dir ? dir : "schemas") + "/verify_report.schema.json";
    std::ifstream f(path);
    REQUIRE_MESSAGE(f.good(), "cannot open schema at " << path);
    Json j;
    f >> j;
    return j;
}

struct ProcResult {
    int exit_code = -1;
    std::string output;
};

// Runs the built binary when AGC_CLI_BIN is exported (ctest does this).
ProcResult run_binary(const std::string& args) {
    const char* bin = std::getenv("AGC_CLI_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    ProcResult res;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.output.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool have_binary() { return std::getenv("AGC_CLI_BIN") != nullptr; }

}  // namespace

TEST_CASE("run configs round-trip through JSON") {
    RunConfig cfg = base_config("code");
    cfg.p = 11;
    cfg.ext = 2;
    cfg.base = "x0=1";
    cfg.m = 12;
    cfg.esel = "orbit-complement";
    cfg.exact_d = true;
    cfg.format = "json";
    cfg.caps.mindist = 12345;
    cfg.a = "2";
    const RunConfig back = run_config_from_json(to_json(cfg));
    CHECK(back == cfg);
}

TEST_CASE("caps environment parsing") {
    setenv("AGC_CAPS", "closure=777;mindist=999,paut=6", 1);
    const Caps caps = caps_from_env();
    CHECK(caps.closure == 777);
    CHECK(caps.mindist == 999);
    CHECK(caps.paut_n == 6);
    setenv("AGC_CAPS", "bogus=1", 1);
    CHECK_THROWS_AS(caps_from_env(), ConfigError);
    unsetenv("AGC_CAPS");
    CHECK(caps_from_env().closure == 100000);
}

TEST_CASE("point and automorphism counts through the command layer") {
    RunConfig cfg = base_config("points");
    cfg.p = 7;
    cfg.ext = 2;
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("count: 92") != std::string::npos);

    cfg.ext = 1;
    CHECK(run_command(cfg).output.find("count: 8") != std::string::npos);

    RunConfig aut = base_config("aut");
    aut.p = 7;
    aut.ext = 1;
    CHECK(run_command(aut).output.find("aut_order: 336") != std::string::npos);
    aut.ext = 2;
    CHECK(run_command(aut).output.find("aut_order: 672") != std::string::npos);
}

TEST_CASE("orbits command") {
    RunConfig cfg = base_config("orbits");
    cfg.p = 7;
    cfg.ext = 2;
    cfg.point = "x0=1";
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("orbit: size=8") != std::string::npos);
    CHECK(res.output.find("orbit: size=84") != std::string::npos);
    CHECK(res.output.find("orbit_size=8 stab_order=84") != std::string::npos);
}

TEST_CASE("code command text output") {
    RunConfig cfg = base_config("code");
    cfg.p = 7;
    cfg.ext = 1;
    cfg.base = "inf";
    cfg.m = 5;
    cfg.esel = "all-minus-base";
    cfg.exact_d = true;
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("params: n=7 k=3 d_designed=2 d_exact=5") != std::string::npos);
    CHECK(res.output.find("7 7 3\n") != std::string::npos);
}

TEST_CASE("code command over the quadratic extension") {
    RunConfig cfg = base_config("code");
    cfg.p = 7;
    cfg.ext = 2;
    cfg.base = "x0=1";
    cfg.m = 7;
    cfg.esel = "orbit-complement";
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("params: n=84 k=5 d_designed=77") != std::string::npos);
    CHECK(res.output.find("49 84 5\n") != std::string::npos);
}

TEST_CASE("code command for the p = 11 family") {
    RunConfig cfg = base_config("code");
    cfg.p = 11;
    cfg.ext = 2;
    cfg.base = "x0=0";
    cfg.m = 12;
    cfg.esel = "orbit-complement";
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("params: n=220 k=8") != std::string::npos);
}

TEST_CASE("verify scenario 1 outside the certified range still audits cleanly") {
    RunConfig cfg = base_config("verify");
    cfg.example = "1";
    cfg.m = 22;
    cfg.format = "json";
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    const Json rep = Json::parse(res.output);
    CHECK_FALSE(rep["corollary_applies"].get<bool>());
    CHECK(rep["image_order"] == 84);

    cfg.m = 4;  // below the range where the dimension formula is pinned
    CHECK(run_command(cfg).exit_code == 2);
}

TEST_CASE("JSON renderings") {
    const Curve curve(7, 2);
    const auto f = curve.field();
    CHECK(to_json(f->element({3, 5})) == Json::array({3, 5}));
    CHECK(to_json(curve.infinity()) == Json("inf"));
    const Json pt = to_json(curve.finite(f->one(), f->zero()));
    CHECK(pt["x"] == Json::array({1, 0}));
    CHECK(pt["y"] == Json::array({0, 0}));
    const Json aut = to_json(AutElement::identity(curve));
    CHECK(aut["M"] == Json::parse("[[1,0],[0,1]]"));
    CHECK(aut["e"] == Json::array({1, 0}));
}

TEST_CASE("rrbasis flags the special-divisor range") {
    RunConfig cfg = base_config("rrbasis");
    cfg.p = 7;
    cfg.ext = 1;
    cfg.base = "inf";
    cfg.m = 4;  // 2g - 2
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("dim: 3") != std::string::npos);
    CHECK(res.output.find("note: m <= 2g - 2") != std::string::npos);
    cfg.m = 5;
    CHECK(run_command(cfg).output.find("note:") == std::string::npos);
}

TEST_CASE("rho command reports generator images") {
    RunConfig cfg = base_config("rho");
    cfg.p = 7;
    cfg.ext = 1;
    cfg.base = "inf";
    cfg.m = 5;
    cfg.a = "2";
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("gamma2(a=2) -> (2,5,3)(4,6,7)") != std::string::npos);
    CHECK(res.output.find("gamma3 -> (1,2,3,4,5,6,7)") != std::string::npos);
    CHECK(res.output.find("gamma1 -> ()") != std::string::npos);
    CHECK(res.output.find("gamma4 -> not in stabilizer") != std::string::npos);
}

TEST_CASE("verify scenarios succeed") {
    for (const std::string example : {"1", "2"}) {
        RunConfig cfg = base_config("verify");
        cfg.example = example;
        cfg.m = example == "1" ? 7 : 5;
        const CmdResult res = run_command(cfg);
        CHECK(res.exit_code == 0);
        CHECK(res.output.find("result: PASS") != std::string::npos);
    }
}

TEST_CASE("verify reports validate against the shipped schema") {
    const Json sch = schema();
    for (const std::string example : {"1", "2"}) {
        RunConfig cfg = base_config("verify");
        cfg.example = example;
        cfg.m = example == "1" ? 7 : 5;
        cfg.format = "json";
        const CmdResult res = run_command(cfg);
        REQUIRE(res.exit_code == 0);
        const Json report = Json::parse(res.output);
        std::string why;
        CHECK_MESSAGE(schema_check::validate(report, sch, &why), why);
        CHECK(report["discrepancies"].size() == (example == "2" ? 2 : 0));
    }
}

TEST_CASE("error exit codes") {
    SUBCASE("invalid curve parameters") {
        RunConfig cfg = base_config("points");
        cfg.p = 6;
        CHECK(run_command(cfg).exit_code == 2);
        cfg.p = 5;  // 5 = 1 (mod 4)
        CHECK(run_command(cfg).exit_code == 2);
    }
    SUBCASE("unknown command") {
        CHECK(run_command(base_config("frobnicate")).exit_code == 2);
    }
    SUBCASE("stab needs a point") {
        RunConfig cfg = base_config("stab");
        CHECK(run_command(cfg).exit_code == 2);
    }
    SUBCASE("divisor base off the curve") {
        RunConfig cfg = base_config("rrbasis");
        cfg.base = "x0=1,y=3";
        CHECK(run_command(cfg).exit_code == 2);
    }
    SUBCASE("exhaustive search past the cap") {
        RunConfig cfg = base_config("paut");
        cfg.p = 7;
        cfg.ext = 2;
        cfg.base = "x0=1";
        cfg.m = 7;
        cfg.esel = "orbit-complement";
        CHECK(run_command(cfg).exit_code == 3);  // n = 84
    }
    SUBCASE("minimum distance past the cap") {
        RunConfig cfg = base_config("code");
        cfg.p = 7;
        cfg.ext = 2;
        cfg.base = "x0=1";
        cfg.m = 7;
        cfg.esel = "orbit-complement";
        cfg.exact_d = true;
        cfg.caps.mindist = 100;
        CHECK(run_command(cfg).exit_code == 3);
    }
    SUBCASE("malformed explicit evaluation set") {
        RunConfig cfg = base_config("code");
        cfg.esel = "explicit";
        cfg.epoints = "0,0;1";
        CHECK(run_command(cfg).exit_code == 2);
    }
}

TEST_CASE("explicit evaluation points build the same short code") {
    RunConfig cfg = base_config("code");
    cfg.p = 7;
    cfg.ext = 1;
    cfg.base = "inf";
    cfg.m = 5;
    cfg.esel = "explicit";
    cfg.epoints = "0,0;1,0;2,0;3,0;4,0;5,0;6,0";
    cfg.exact_d = true;
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("d_exact=5") != std::string::npos);
}

TEST_CASE("byte-identical output for identical configs") {
    for (const std::string fmt : {"text", "json"}) {
        RunConfig points = base_config("points");
        points.p = 7;
        points.ext = 2;
        points.format = fmt;
        CHECK(run_command(points).output == run_command(points).output);

        RunConfig verify = base_config("verify");
        verify.example = "2";
        verify.format = fmt;
        CHECK(run_command(verify).output == run_command(verify).output);

        RunConfig gv = base_config("gv");
        gv.gv_n = 84;
        gv.gv_k = 47;
        gv.gv_d = 35;
        gv.gv_q = 49;
        gv.format = fmt;
        CHECK(run_command(gv).output == run_command(gv).output);
    }
}

TEST_CASE("gv command prints both integers in full") {
    RunConfig cfg = base_config("gv");
    cfg.gv_n = 7;
    cfg.gv_k = 3;
    cfg.gv_d = 5;
    cfg.gv_q = 7;
    const CmdResult res = run_command(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("sphere_sum: 4897") != std::string::npos);
    CHECK(res.output.find("q_power: 2401") != std::string::npos);
    CHECK(res.output.find("beats_gv: true") != std::string::npos);

    cfg.gv_d = 0;
    CHECK(run_command(cfg).exit_code == 2);
}

TEST_CASE("installed binary behaves like the command layer") {
    if (!have_binary()) {
        MESSAGE("AGC_CLI_BIN not set; skipping binary-level checks");
        return;
    }
    const ProcResult points = run_binary("points --p 7 --ext 2");
    CHECK(points.exit_code == 0);
    CHECK(points.output.find("count: 92") != std::string::npos);
    CHECK(run_binary("points --p 7 --ext 2").output == points.output);

    const ProcResult verify = run_binary("verify --example 2");
    CHECK(verify.exit_code == 0);
    CHECK(verify.output.find("result: PASS") != std::string::npos);

    const ProcResult remark2 = run_binary("verify --example remark2 --format json");
    CHECK(remark2.exit_code == 0);
    const Json rep = Json::parse(remark2.output);
    CHECK(rep["ok"].get<bool>());
    const Json sch = schema();
    for (const auto& sub : rep["reports"]) {
        std::string why;
        CHECK_MESSAGE(schema_check::validate(sub, sch, &why), why);
    }

    CHECK(run_binary("points --p 6").exit_code == 2);
    CHECK(run_binary("bogus").exit_code == 2);
    CHECK(run_binary("gv 4 4 1 2").output.find("beats_gv: false") != std::string::npos);

    // caps can be overridden from the environment
    const ProcResult capped = run_binary("code --p 7 --ext 2 --base x0=1 --m 5 "
                                         "--E orbit-complement --exact-d --cap-mindist 100");
    CHECK(capped.exit_code == 3);
}

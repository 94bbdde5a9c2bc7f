// End-to-end CLI checks: exit-code mapping, output round trips, seed
// precedence. Takes the CLI binary path as argv[1].

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_failures = 0;
std::string g_cli;
fs::path g_dir;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::printf("FAIL %s\n", what.c_str());
    } else {
        std::printf("ok   %s\n", what.c_str());
    }
}

int run(const std::string& args, const std::string& out_name = "out.txt") {
    const std::string cmd =
        "\"" + g_cli + "\" " + args + " --out " + (g_dir / out_name).string() + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& name) {
    std::ifstream in(g_dir / name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_spec(const std::string& name, const std::string& body) {
    std::ofstream(g_dir / name) << body;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: coco_cli_tests <path-to-cli>\n");
        return 1;
    }
    g_cli = argv[1];
    g_dir = fs::temp_directory_path() / "coco_cli_tests";
    fs::create_directories(g_dir);

    write_spec("quad4.json", R"({
      "version": 1, "kind": "certify",
      "function": {"id": "quadratic", "q": [[1,0],[0,4]], "b": [0,0]},
      "domain": {"shape": "box", "lower": [-1,-1], "upper": [1,1]},
      "beta": 4.0, "seed": 42, "count": 2000
    })");
    write_spec("quad3.json", R"({
      "version": 1, "kind": "certify",
      "function": {"id": "quadratic", "q": [[1,0],[0,4]], "b": [0,0]},
      "domain": {"shape": "box", "lower": [-1,-1], "upper": [1,1]},
      "beta": 3.0, "seed": 42, "count": 2000
    })");

    // exit 0: consistent certification, and the report re-parses
    check(run("certify --spec " + (g_dir / "quad4.json").string(), "r4.json") == 0,
          "certify at beta=4 exits 0");
    {
        const json r = json::parse(slurp("r4.json"));
        check(r.at("type") == "bh_report" && r.at("consistency").get<bool>(),
              "certify report re-parses and is consistent");
    }

    // exit 1: falsified, witnesses present
    check(run("certify --spec " + (g_dir / "quad3.json").string(), "r3.json") == 1,
          "certify at beta=3 exits 1");
    {
        const json r = json::parse(slurp("r3.json"));
        check(r.at("verdict_a").contains("witness_pair"), "falsified verdict carries a witness");
    }

    // exit 2: unknown field (strict schema), missing file, bad usage
    write_spec("unknown.json", R"({"version":1,"kind":"certify","surprise":true})");
    check(run("certify --spec " + (g_dir / "unknown.json").string()) == 2,
          "unknown spec field exits 2");
    check(run("certify --spec " + (g_dir / "nope.json").string()) == 2, "missing spec file exits 2");
    check(run("frobnicate") == 2, "unknown subcommand exits 2");

    // exit 3: runtime evaluation error (x0 outside the operator domain)
    write_spec("bad_solve.json", R"({
      "version": 1, "kind": "solve",
      "phi": {"id": "l1", "weight": 1.0},
      "operator": {"id": "quadratic", "q": [[1,0],[0,1]], "b": [0,0]},
      "domain": {"shape": "box", "lower": [-1,-1], "upper": [1,1]},
      "x0": [5.0, 5.0], "beta": 1.0, "mu": 0.5
    })");
    check(run("solve --spec " + (g_dir / "bad_solve.json").string()) == 3,
          "evaluation outside the domain exits 3");

    // solve: csv trace with mandatory header, convergent box problem
    write_spec("solve.json", R"({
      "version": 1, "kind": "solve",
      "phi": {"id": "box", "lower": [0,0], "upper": [1,1]},
      "operator": {"id": "quadratic", "q": [[1,0],[0,4]], "b": [2,-1]},
      "domain": {"shape": "box", "lower": [-1e30,-1e30], "upper": [1e30,1e30]},
      "x0": [0.5, 0.5], "beta": 0.25, "mu": 0.125
    })");
    check(run("solve --spec " + (g_dir / "solve.json").string(), "trace.csv") == 0,
          "solve converges and exits 0");
    {
        const std::string trace = slurp("trace.csv");
        check(trace.rfind("iter,t,x_0,x_1,residual\n", 0) == 0, "trace csv header");
    }

    // solve json summary includes admissibility
    check(run("solve --spec " + (g_dir / "solve.json").string() + " --format json", "solve.json.out") == 0,
          "solve json summary exits 0");
    {
        const json r = json::parse(slurp("solve.json.out"));
        check(r.at("admissibility").at("admissible").get<bool>() == true,
              "mu=0.125 < 2*beta admissible in summary");
        check(r.at("converged").get<bool>(), "solve summary converged");
    }

    // divergent run exits 1
    write_spec("diverge.json", R"({
      "version": 1, "kind": "solve",
      "phi": {"id": "box", "lower": [-1e29,-1e29], "upper": [1e29,1e29]},
      "operator": {"id": "quadratic", "q": [[1,0],[0,4]], "b": [2,-1]},
      "domain": {"shape": "box", "lower": [-1e30,-1e30], "upper": [1e30,1e30]},
      "x0": [0.3, 0.7], "beta": 0.25, "mu": 0.6
    })");
    check(run("solve --spec " + (g_dir / "diverge.json").string()) == 1, "divergent solve exits 1");

    // moduli with a claim: rotation is 1-Lipschitz but not cocoercive
    write_spec("rot.json", R"({
      "version": 1, "kind": "moduli",
      "operator": {"id": "rotation"},
      "domain": {"shape": "box", "lower": [-1,-1], "upper": [1,1]},
      "seed": 42, "count": 2000, "beta": 1.0
    })");
    check(run("moduli --spec " + (g_dir / "rot.json").string(), "rot_report.json") == 1,
          "rotation cocoercivity claim exits 1");
    {
        const json r = json::parse(slurp("rot_report.json"));
        check(r.at("lipschitz_claim") == "consistent" && r.at("cocoercivity_claim") == "falsified",
              "rotation claims split as expected");
    }

    // demo sweep: claim falsified near zero on every alpha => exit 1, csv shape
    check(run("demo example31 --alpha 2.0 --seed 42") == 1, "example31 demo exits 1 (claim falsified)");
    {
        const std::string csv = slurp("out.txt");
        check(csv.rfind("alpha,grid_max_f2,lipschitz_sup,coco_inf,claimed_modulus,", 0) == 0,
              "demo csv header");
        check(csv.find("falsified") != std::string::npos, "demo records the falsification");
    }
    check(run("demo rotation --seed 42", "rotdemo.json") == 1, "rotation demo exits 1");
    {
        const json r = json::parse(slurp("rotdemo.json"));
        check(r.at("consistency").get<bool>() == false, "rotation demo flags inconsistency");
    }

    // seed precedence: flag overrides the spec seed
    write_spec("mod_seeded.json", R"({
      "version": 1, "kind": "moduli",
      "operator": {"id": "quadratic", "q": [[1,0.2],[0.2,2]], "b": [0,0]},
      "domain": {"shape": "box", "lower": [-1,-1], "upper": [1,1]},
      "seed": 1, "count": 500
    })");
    run("moduli --spec " + (g_dir / "mod_seeded.json").string(), "seed_spec.json");
    run("moduli --spec " + (g_dir / "mod_seeded.json").string() + " --seed 1", "seed_flag_same.json");
    run("moduli --spec " + (g_dir / "mod_seeded.json").string() + " --seed 2", "seed_flag_diff.json");
    check(slurp("seed_spec.json") == slurp("seed_flag_same.json"), "flag seed == spec seed output");
    check(slurp("seed_spec.json") != slurp("seed_flag_diff.json"), "different seed changes output");

    // COCO_SEED is the lowest-precedence source: used only when neither the
    // flag nor the spec provides a seed
    write_spec("mod_unseeded.json", R"({
      "version": 1, "kind": "moduli",
      "operator": {"id": "quadratic", "q": [[1,0.2],[0.2,2]], "b": [0,0]},
      "domain": {"shape": "box", "lower": [-1,-1], "upper": [1,1]},
      "count": 500
    })");
    {
        const std::string base = "\"" + g_cli + "\" moduli --spec " + (g_dir / "mod_unseeded.json").string();
        const auto shell = [](const std::string& cmd) { return std::system(cmd.c_str()); };
        check(shell("COCO_SEED=5 " + base + " --out " + (g_dir / "env5.json").string() + " 2>/dev/null") == 0,
              "COCO_SEED run succeeds");
        check(shell(base + " --seed 5 --out " + (g_dir / "flag5.json").string() + " 2>/dev/null") == 0,
              "--seed run succeeds");
        check(shell("COCO_SEED=9 " + base + " --seed 5 --out " + (g_dir / "flagwins.json").string() +
                    " 2>/dev/null") == 0,
              "flag+env run succeeds");
        check(slurp("env5.json") == slurp("flag5.json"), "COCO_SEED matches an equal --seed");
        check(slurp("flagwins.json") == slurp("flag5.json"), "--seed overrides COCO_SEED");
    }

    // default demo grid includes a near-zero half-width; rows appear, no crash
    check(run("demo example31 --seed 42", "demo_default.csv") == 1, "default demo grid runs");
    {
        const std::string csv = slurp("demo_default.csv");
        check(csv.find("\n0.001,") != std::string::npos, "near-zero alpha row present");
        check(std::count(csv.begin(), csv.end(), '\n') == 8, "default grid emits 7 rows + header");
    }
    check(run("demo example31 --alpha 5.0") == 2, "alpha outside (0,4) exits 2");
    check(run("demo nosuchdemo") == 2, "unknown demo exits 2");

    // the 1-d catalog function through the certify path
    write_spec("ex31.json", R"({
      "version": 1, "kind": "certify",
      "function": {"id": "example31"},
      "domain": {"shape": "box", "lower": [0.5], "upper": [3.5]},
      "beta": 65.0, "seed": 42, "count": 2000
    })");
    check(run("certify --spec " + (g_dir / "ex31.json").string()) == 0,
          "example31 certifies at a constant above its curvature supremum");

    std::printf("%s: %d failure(s)\n", g_failures == 0 ? "ALL PASS" : "FAILURES", g_failures);
    return g_failures == 0 ? 0 : 1;
}

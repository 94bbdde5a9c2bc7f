// Command-line front end: certify / moduli / solve / demo subcommands over
// JSON problem specs. Exit codes: 0 consistent or converged, 1 falsified or
// diverged, 2 usage or spec error, 3 runtime evaluation error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "coco/demo.hpp"
#include "coco/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitSpecError = 2;
constexpr int kExitRuntimeError = 3;

struct Options {
    std::string spec_path;
    std::string out_path;
    std::string format;
    std::optional<std::uint64_t> seed;
    std::vector<double> alphas;
    std::string demo_name;
};

coco::Json load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    coco::Json doc;
    in >> doc;
    return doc;
}

void write_output(const std::string& out_path, const std::string& payload) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << payload;
}

// Seed precedence: --seed flag > spec file > COCO_SEED > 42.
std::uint64_t resolve_seed(const Options& opt, const coco::ProblemSpec& spec) {
    if (opt.seed) return *opt.seed;
    if (spec.seed_given) return spec.seed;
    if (const char* env = std::getenv("COCO_SEED")) return std::strtoull(env, nullptr, 10);
    return 42;
}

int run_certify(const Options& opt, const coco::ProblemSpec& spec) {
    const std::uint64_t seed = resolve_seed(opt, spec);
    const coco::BHReport report =
        coco::bh_check(*spec.function, *spec.domain, *spec.beta, seed, spec.count);
    write_output(opt.out_path, coco::to_json(report).dump(2) + "\n");
    const bool any_falsified = report.verdict_a.verdict == coco::Verdict::falsified ||
                               report.verdict_b.verdict == coco::Verdict::falsified ||
                               report.verdict_c.verdict == coco::Verdict::falsified;
    return (any_falsified || !report.consistency) ? kExitFalsified : kExitOk;
}

int run_moduli(const Options& opt, const coco::ProblemSpec& spec) {
    const std::uint64_t seed = resolve_seed(opt, spec);
    const coco::ModulusReport report =
        spec.scales ? coco::estimate_moduli(*spec.op, *spec.domain, seed, spec.count, *spec.scales)
                    : coco::estimate_moduli(*spec.op, *spec.domain, seed, spec.count);
    coco::Json j = coco::to_json(report);

    bool falsified = report.monotone_violation.has_value();
    if (spec.beta) {
        // interpret beta as the claim: beta-Lipschitz and 1/beta-cocoercive
        const bool lip_ok = report.lipschitz_sup <= *spec.beta * (1.0 + coco::kViolationTol);
        const bool coco_ok =
            !report.has_coco() || report.coco_inf >= (1.0 / *spec.beta) * (1.0 - coco::kViolationTol);
        j["claimed_beta"] = *spec.beta;
        j["lipschitz_claim"] = lip_ok ? "consistent" : "falsified";
        j["cocoercivity_claim"] = coco_ok ? "consistent" : "falsified";
        falsified = falsified || !lip_ok || !coco_ok;
    }
    write_output(opt.out_path, j.dump(2) + "\n");
    return falsified ? kExitFalsified : kExitOk;
}

int run_solve(const Options& opt, const coco::ProblemSpec& spec) {
    const std::uint64_t seed = resolve_seed(opt, spec);
    coco::InclusionProblem problem{*spec.phi, *spec.op, spec.beta, *spec.domain, *spec.x0};
    const coco::AdmissibilityReport adm =
        coco::admissibility(problem, spec.mu.value_or(0.0), seed, spec.count);
    const double mu = spec.mu.value_or(adm.beta);  // midpoint of (0, 2 beta)
    const double tol = spec.tol.value_or(1e-10);
    const long max_iter = spec.max_iter.value_or(100000);

    coco::SolveTrace trace;
    if (spec.mode == coco::SolveMode::fixed_point) {
        trace = coco::forward_backward(problem, mu, tol, max_iter);
    } else {
        const double dt = spec.dt.value_or(0.1);
        const double t_end = spec.t_end.value_or(100.0);
        trace = coco::dyn_integrate(problem, mu, dt, t_end, tol, spec.mode);
    }

    if (opt.format == "json") {
        coco::Json j = coco::to_json(trace);
        coco::AdmissibilityReport adm_used = adm;
        adm_used.mu = mu;
        adm_used.admissible = mu > 0.0 && mu < 2.0 * adm.beta;
        j["admissibility"] = coco::to_json(adm_used);
        write_output(opt.out_path, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        coco::write_trace_csv(os, trace);
        write_output(opt.out_path, os.str());
    }
    return trace.converged ? kExitOk : kExitFalsified;
}

int run_demo(const Options& opt, const coco::ProblemSpec& spec) {
    const std::uint64_t seed = resolve_seed(opt, spec);
    const std::string name = !opt.demo_name.empty() ? opt.demo_name : spec.demo_name;
    if (name == "example31") {
        std::vector<double> grid = !opt.alphas.empty() ? opt.alphas : spec.alpha_grid;
        if (grid.empty()) grid = coco::default_alpha_grid();
        const auto rows = coco::demo_example31(grid, seed, spec.count);
        std::ostringstream os;
        coco::write_demo_csv(os, rows);
        write_output(opt.out_path, os.str());
        const bool any_falsified =
            std::any_of(rows.begin(), rows.end(),
                        [](const coco::Example31DemoRow& r) { return !r.claim_consistent; });
        return any_falsified ? kExitFalsified : kExitOk;
    }
    if (name == "rotation") {
        const coco::BHReport report = coco::demo_rotation(seed, spec.count);
        write_output(opt.out_path, coco::to_json(report).dump(2) + "\n");
        return report.consistency ? kExitOk : kExitFalsified;
    }
    throw std::invalid_argument("unknown demo \"" + name + "\" (available: example31, rotation)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cocoercivity toolkit: property certification and forward-backward solvers"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool spec_required) {
        auto* s = cmd->add_option("--spec", opt.spec_path, "JSON problem spec");
        if (spec_required) s->required();
        cmd->add_option("--out", opt.out_path, "output file (default stdout)");
        cmd->add_option("--seed", opt.seed, "seed override (flag > spec > COCO_SEED > 42)");
        cmd->add_option("--format", opt.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* certify = app.add_subcommand("certify", "joint Lipschitz/convexity/cocoercivity check");
    add_common(certify, true);
    CLI::App* moduli = app.add_subcommand("moduli", "sampled modulus estimation and falsification");
    add_common(moduli, true);
    CLI::App* solve = app.add_subcommand("solve", "forward-backward iteration or its dynamical system");
    add_common(solve, true);
    CLI::App* demo = app.add_subcommand("demo", "built-in demonstration sweeps");
    demo->add_option("name", opt.demo_name, "demo name: example31 or rotation");
    add_common(demo, false);
    demo->add_option("--alpha", opt.alphas, "interval half-widths for the example31 sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitSpecError;
    }

    try {
        coco::ProblemSpec spec;
        if (!opt.spec_path.empty()) {
            spec = coco::parse_problem_spec(load_spec(opt.spec_path));
        } else {
            spec.kind = "demo";  // demo runs without a spec file
        }

        if (certify->parsed()) {
            if (spec.kind != "certify") throw std::invalid_argument("spec kind must be certify");
            return run_certify(opt, spec);
        }
        if (moduli->parsed()) {
            if (spec.kind != "moduli") throw std::invalid_argument("spec kind must be moduli");
            return run_moduli(opt, spec);
        }
        if (solve->parsed()) {
            if (spec.kind != "solve") throw std::invalid_argument("spec kind must be solve");
            return run_solve(opt, spec);
        }
        if (demo->parsed()) {
            if (!opt.spec_path.empty() && spec.kind != "demo")
                throw std::invalid_argument("spec kind must be demo");
            return run_demo(opt, spec);
        }
        return kExitSpecError;
    } catch (const coco::Json::exception& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpecError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpecError;
    } catch (const std::domain_error& e) {
        std::cerr << "evaluation error: " << e.what() << "\n";
        return kExitRuntimeError;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntimeError;
    }
}

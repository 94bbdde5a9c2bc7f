#include "coco/serialize.hpp"

#include <set>
#include <stdexcept>

#include "coco/derivatives.hpp"

namespace coco {

namespace {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::falsified: return "falsified";
        case Verdict::consistent: return "consistent";
        case Verdict::proved: return "proved";
    }
    return "unknown";
}

std::string mode_name(SolveMode m) {
    switch (m) {
        case SolveMode::fixed_point: return "fixed_point";
        case SolveMode::euler: return "euler";
        case SolveMode::rk4: return "rk4";
    }
    return "unknown";
}

void reject_unknown_fields(const Json& j, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw std::invalid_argument("spec: unknown field \"" + it.key() + "\" in " + where);
}

Vector parse_vector(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("spec: " + where + " must be a nonempty array of numbers");
    Vector v(static_cast<Eigen::Index>(j.size()));
    Eigen::Index i = 0;
    for (const auto& e : j) {
        if (!e.is_number()) throw std::invalid_argument("spec: " + where + " must contain numbers");
        v[i++] = e.get<double>();
    }
    return v;
}

Matrix parse_matrix(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("spec: " + where + " must be an array of rows");
    const auto rows = static_cast<Eigen::Index>(j.size());
    Matrix m;
    Eigen::Index r = 0;
    for (const auto& row : j) {
        Vector v = parse_vector(row, where + " row");
        if (r == 0) m.resize(rows, v.size());
        if (v.size() != m.cols()) throw std::invalid_argument("spec: " + where + " rows differ in length");
        m.row(r++) = v.transpose();
    }
    return m;
}

}  // namespace

Json to_json(const Vector& v) {
    Json a = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

Json to_json(const PairSample& p) {
    return Json{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"scale", p.scale}};
}

Json to_json(const ClaimDescriptor& c) {
    return Json{{"subject", c.subject},
                {"property", c.property},
                {"modulus", c.modulus},
                {"domain", c.domain_desc}};
}

Json to_json(const Certificate& c) {
    Json j{{"claim", to_json(c.claim)},
           {"verdict", verdict_name(c.verdict)},
           {"tolerance", c.tolerance},
           {"samples_used", c.samples_used},
           {"worst_margin", c.worst_margin}};
    if (c.witness_pair) j["witness_pair"] = to_json(*c.witness_pair);
    if (c.witness_point) j["witness_point"] = to_json(*c.witness_point);
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json to_json(const ModulusReport& r) {
    Json j{{"lipschitz_sup", r.lipschitz_sup},
           {"pairs_used", r.pairs_used},
           {"pairs_skipped", r.pairs_skipped}};
    j["coco_inf"] = r.has_coco() ? Json(r.coco_inf) : Json(nullptr);
    j["monotone_violation"] = r.monotone_violation ? to_json(*r.monotone_violation) : Json(nullptr);
    if (r.lip_witness) j["lip_witness"] = to_json(*r.lip_witness);
    if (r.coco_witness) j["coco_witness"] = to_json(*r.coco_witness);
    return j;
}

Json to_json(const BHReport& r) {
    return Json{{"type", "bh_report"},
                {"beta", r.beta},
                {"verdict_a", to_json(r.verdict_a)},
                {"verdict_b", to_json(r.verdict_b)},
                {"verdict_c", to_json(r.verdict_c)},
                {"consistency", r.consistency},
                {"descent_worst_gap", r.descent_worst_gap},
                {"descent_checks", r.descent_checks}};
}

Json to_json(const LocalCocoReport& r) {
    Json history = Json::array();
    for (const auto& step : r.history)
        history.push_back(Json{{"radius", step.radius},
                               {"beta_local", step.beta_local},
                               {"consistent", step.consistent}});
    return Json{{"type", "local_coco_report"},
                {"center", to_json(r.center)},
                {"radius", r.radius},
                {"beta_local", r.beta_local},
                {"certificate", to_json(r.certificate)},
                {"history", history}};
}

Json to_json(const AdmissibilityReport& r) {
    Json j{{"type", "admissibility"},
           {"admissible", r.admissible},
           {"mu", r.mu},
           {"beta", r.beta},
           {"beta_source", r.beta_estimated ? "estimated" : "claimed"}};
    if (r.estimate) j["estimate"] = to_json(*r.estimate);
    return j;
}

Json to_json(const SolveTrace& t) {
    return Json{{"type", "solve_summary"},
                {"mode", mode_name(t.mode)},
                {"mu", t.mu},
                {"dt", t.dt},
                {"iterations", t.iterates.size()},
                {"converged", t.converged},
                {"diverged", t.diverged},
                {"final_residual", t.final_residual},
                {"final_point", t.iterates.empty() ? Json(nullptr) : to_json(t.iterates.back())}};
}

// ---------------------------------------------------------------------------

OpenConvexDomain parse_domain(const Json& j) {
    if (!j.is_object() || !j.contains("shape"))
        throw std::invalid_argument("spec: domain must be an object with a \"shape\"");
    const std::string shape = j.at("shape").get<std::string>();
    if (shape == "box") {
        reject_unknown_fields(j, {"shape", "lower", "upper"}, "domain.box");
        return OpenConvexDomain::box(parse_vector(j.at("lower"), "domain.lower"),
                                     parse_vector(j.at("upper"), "domain.upper"));
    }
    if (shape == "ball") {
        reject_unknown_fields(j, {"shape", "center", "radius"}, "domain.ball");
        return OpenConvexDomain::ball(parse_vector(j.at("center"), "domain.center"),
                                      j.at("radius").get<double>());
    }
    if (shape == "intersection") {
        reject_unknown_fields(j, {"shape", "members"}, "domain.intersection");
        std::vector<OpenConvexDomain> members;
        for (const auto& m : j.at("members")) members.push_back(parse_domain(m));
        return OpenConvexDomain::intersection(std::move(members));
    }
    throw std::invalid_argument("spec: unknown domain shape \"" + shape + "\"");
}

ScalarFunction parse_function(const Json& j, const OpenConvexDomain& domain) {
    if (!j.is_object() || !j.contains("id"))
        throw std::invalid_argument("spec: function must be an object with an \"id\"");
    const std::string id = j.at("id").get<std::string>();
    if (id == "example31") {
        reject_unknown_fields(j, {"id"}, "function.example31");
        ScalarFunction f = example31_function();
        if (domain.dimension() != 1)
            throw std::invalid_argument("spec: example31 needs a 1-d domain");
        f.domain = domain;
        return f;
    }
    if (id == "quadratic") {
        reject_unknown_fields(j, {"id", "q", "b"}, "function.quadratic");
        Matrix q = parse_matrix(j.at("q"), "function.q");
        Vector b = j.contains("b") ? parse_vector(j.at("b"), "function.b") : Vector(Vector::Zero(q.rows()));
        return quadratic_function(std::move(q), std::move(b), domain);
    }
    throw std::invalid_argument("spec: unknown function id \"" + id + "\"");
}

VectorOperator parse_operator(const Json& j, const OpenConvexDomain& domain) {
    if (!j.is_object() || !j.contains("id"))
        throw std::invalid_argument("spec: operator must be an object with an \"id\"");
    const std::string id = j.at("id").get<std::string>();
    if (id == "rotation") {
        reject_unknown_fields(j, {"id"}, "operator.rotation");
        return rotation_operator(domain);
    }
    if (id == "quadratic") {
        reject_unknown_fields(j, {"id", "q", "b"}, "operator.quadratic");
        Matrix q = parse_matrix(j.at("q"), "operator.q");
        Vector b = j.contains("b") ? parse_vector(j.at("b"), "operator.b") : Vector(Vector::Zero(q.rows()));
        return quadratic_gradient_operator(std::move(q), std::move(b), domain);
    }
    if (id == "gradient") {
        reject_unknown_fields(j, {"id", "function"}, "operator.gradient");
        return gradient_operator(parse_function(j.at("function"), domain));
    }
    throw std::invalid_argument("spec: unknown operator id \"" + id + "\"");
}

ProxFriendly parse_prox(const Json& j) {
    if (!j.is_object() || !j.contains("id"))
        throw std::invalid_argument("spec: phi must be an object with an \"id\"");
    const std::string id = j.at("id").get<std::string>();
    if (id == "l1") {
        reject_unknown_fields(j, {"id", "weight"}, "phi.l1");
        return ProxFriendly::l1(j.at("weight").get<double>());
    }
    if (id == "box") {
        reject_unknown_fields(j, {"id", "lower", "upper"}, "phi.box");
        return ProxFriendly::box_indicator(parse_vector(j.at("lower"), "phi.lower"),
                                           parse_vector(j.at("upper"), "phi.upper"));
    }
    if (id == "ball") {
        reject_unknown_fields(j, {"id", "center", "radius"}, "phi.ball");
        return ProxFriendly::ball_indicator(parse_vector(j.at("center"), "phi.center"),
                                            j.at("radius").get<double>());
    }
    if (id == "quadratic") {
        reject_unknown_fields(j, {"id", "q", "b"}, "phi.quadratic");
        Matrix q = parse_matrix(j.at("q"), "phi.q");
        Vector b = j.contains("b") ? parse_vector(j.at("b"), "phi.b") : Vector(Vector::Zero(q.rows()));
        return ProxFriendly::quadratic(std::move(q), std::move(b));
    }
    throw std::invalid_argument("spec: unknown phi id \"" + id + "\"");
}

ProblemSpec parse_problem_spec(const Json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("spec: document must be a JSON object");
    reject_unknown_fields(doc,
                          {"version", "kind", "function", "operator", "domain", "beta", "scales",
                           "phi", "x0", "mu", "dt", "t_end", "tol", "max_iter", "mode", "seed",
                           "count", "name", "alpha_grid"},
                          "top level");

    ProblemSpec spec;
    if (!doc.contains("version") || !doc.at("version").is_number_integer())
        throw std::invalid_argument("spec: integer \"version\" is required");
    spec.version = doc.at("version").get<int>();
    if (spec.version != 1) throw std::invalid_argument("spec: unsupported version");
    if (!doc.contains("kind")) throw std::invalid_argument("spec: \"kind\" is required");
    spec.kind = doc.at("kind").get<std::string>();

    if (doc.contains("seed")) {
        spec.seed = doc.at("seed").get<std::uint64_t>();
        spec.seed_given = true;
    }
    if (doc.contains("count")) {
        spec.count = doc.at("count").get<int>();
        if (spec.count < 1) throw std::invalid_argument("spec: count must be >= 1");
    }
    if (doc.contains("beta")) {
        spec.beta = doc.at("beta").get<double>();
        if (!(*spec.beta > 0.0)) throw std::invalid_argument("spec: beta must be > 0");
    }
    if (doc.contains("scales")) {
        std::vector<double> s;
        for (const auto& e : doc.at("scales")) s.push_back(e.get<double>());
        spec.scales = std::move(s);
    }
    if (doc.contains("mu")) spec.mu = doc.at("mu").get<double>();
    if (doc.contains("dt")) spec.dt = doc.at("dt").get<double>();
    if (doc.contains("t_end")) spec.t_end = doc.at("t_end").get<double>();
    if (doc.contains("tol")) spec.tol = doc.at("tol").get<double>();
    if (doc.contains("max_iter")) spec.max_iter = doc.at("max_iter").get<long>();
    if (doc.contains("mode")) {
        const std::string m = doc.at("mode").get<std::string>();
        if (m == "fixed_point")
            spec.mode = SolveMode::fixed_point;
        else if (m == "euler")
            spec.mode = SolveMode::euler;
        else if (m == "rk4")
            spec.mode = SolveMode::rk4;
        else
            throw std::invalid_argument("spec: unknown mode \"" + m + "\"");
    }

    if (spec.kind == "certify") {
        if (!doc.contains("domain") || !doc.contains("function") || !spec.beta)
            throw std::invalid_argument("spec: certify needs domain, function and beta");
        spec.domain = parse_domain(doc.at("domain"));
        spec.function = parse_function(doc.at("function"), *spec.domain);
        return spec;
    }
    if (spec.kind == "moduli") {
        if (!doc.contains("domain") || !doc.contains("operator"))
            throw std::invalid_argument("spec: moduli needs domain and operator");
        spec.domain = parse_domain(doc.at("domain"));
        spec.op = parse_operator(doc.at("operator"), *spec.domain);
        return spec;
    }
    if (spec.kind == "solve") {
        if (!doc.contains("domain") || !doc.contains("operator") || !doc.contains("phi") ||
            !doc.contains("x0"))
            throw std::invalid_argument("spec: solve needs domain, operator, phi and x0");
        spec.domain = parse_domain(doc.at("domain"));
        spec.op = parse_operator(doc.at("operator"), *spec.domain);
        spec.phi = parse_prox(doc.at("phi"));
        spec.x0 = parse_vector(doc.at("x0"), "x0");
        return spec;
    }
    if (spec.kind == "demo") {
        if (!doc.contains("name")) throw std::invalid_argument("spec: demo needs a name");
        spec.demo_name = doc.at("name").get<std::string>();
        if (doc.contains("alpha_grid"))
            for (const auto& e : doc.at("alpha_grid")) spec.alpha_grid.push_back(e.get<double>());
        return spec;
    }
    throw std::invalid_argument("spec: unknown kind \"" + spec.kind + "\"");
}

}  // namespace coco

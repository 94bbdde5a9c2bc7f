#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "coco/certifier.hpp"
#include "coco/moduli.hpp"
#include "coco/splitting.hpp"

namespace coco {

using Json = nlohmann::json;

Json to_json(const Vector& v);
Json to_json(const PairSample& p);
Json to_json(const ClaimDescriptor& c);
Json to_json(const Certificate& c);
Json to_json(const ModulusReport& r);
Json to_json(const BHReport& r);
Json to_json(const LocalCocoReport& r);
Json to_json(const AdmissibilityReport& r);
Json to_json(const SolveTrace& t);  // summary, not the full trace (that is CSV)

/// Parsed problem specification. Strict: unknown fields anywhere in the
/// document are rejected.
struct ProblemSpec {
    int version = 1;
    std::string kind;  // certify | moduli | solve | demo
    std::uint64_t seed = 42;
    bool seed_given = false;
    int count = 2000;

    // certify / moduli
    std::optional<ScalarFunction> function;
    std::optional<VectorOperator> op;
    std::optional<OpenConvexDomain> domain;
    std::optional<double> beta;
    std::optional<std::vector<double>> scales;

    // solve
    std::optional<ProxFriendly> phi;
    std::optional<Vector> x0;
    std::optional<double> mu;
    std::optional<double> dt;
    std::optional<double> t_end;
    std::optional<double> tol;
    std::optional<long> max_iter;
    SolveMode mode = SolveMode::fixed_point;

    // demo
    std::string demo_name;
    std::vector<double> alpha_grid;
};

/// Throws std::invalid_argument on schema violations (unknown fields,
/// missing required fields, bad shapes or catalog ids).
ProblemSpec parse_problem_spec(const Json& doc);

OpenConvexDomain parse_domain(const Json& j);
ScalarFunction parse_function(const Json& j, const OpenConvexDomain& domain);
VectorOperator parse_operator(const Json& j, const OpenConvexDomain& domain);
ProxFriendly parse_prox(const Json& j);

}  // namespace coco

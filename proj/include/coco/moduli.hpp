#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "coco/derivatives.hpp"
#include "coco/domain.hpp"
#include "coco/functions.hpp"

namespace coco {

/// Relative tolerance applied to every defining inequality before a
/// violation is reported.
inline constexpr double kViolationTol = 1e-8;

/// Sampled Lipschitz/cocoercivity moduli of an operator over point pairs.
///   lipschitz_sup : sup over pairs of |Tx - Ty| / |x - y|
///   coco_inf      : inf over admissible pairs of <Tx - Ty, x - y> / |Tx - Ty|^2
/// Pairs whose displacement |Tx - Ty| falls under the degeneracy tolerance
/// 1e-12 * (1 + |Tx|) are skipped (counted, never extremal). A negative
/// displacement inner product beyond tolerance is recorded as a
/// monotonicity violation.
struct ModulusReport {
    double lipschitz_sup = 0.0;
    double coco_inf = std::numeric_limits<double>::infinity();
    std::optional<PairSample> monotone_violation;
    std::optional<PairSample> lip_witness;
    std::optional<PairSample> coco_witness;
    long pairs_used = 0;
    long pairs_skipped = 0;

    bool has_coco() const { return coco_witness.has_value(); }
};

ModulusReport estimate_moduli(const VectorOperator& t, const OpenConvexDomain& domain,
                              std::uint64_t seed, int count,
                              const std::vector<double>& scales = default_scale_ladder());

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct ClaimDescriptor {
    std::string subject;      // operator or function label
    std::string property;     // e.g. "lipschitz", "cocoercive", "convex"
    double modulus = 0.0;     // claimed constant, 0 when not applicable
    std::string domain_desc;
};

enum class Verdict { falsified, consistent, proved };

/// Outcome of a sampled property check. `falsified` always carries a
/// re-checkable witness (pair or point) whose margin reproduces the
/// violation; `consistent` records coverage and the worst margin seen;
/// `proved` is reserved for claims settled exactly (quadratics, where
/// eigenvalues decide).
struct Certificate {
    ClaimDescriptor claim;
    Verdict verdict = Verdict::consistent;
    double tolerance = kViolationTol;
    long samples_used = 0;
    double worst_margin = 0.0;  // most adverse signed margin (violation > 0)
    std::optional<PairSample> witness_pair;
    std::optional<Vector> witness_point;
    std::string note;
};

// ---------------------------------------------------------------------------
// Bregman machinery
// ---------------------------------------------------------------------------

/// D_f(x,y) = f(x) - f(y) - <grad f(y), x - y>, analytic gradient preferred.
double bregman(const ScalarFunction& f, const Vector& x, const Vector& y);

/// |D_d(z,x) - D_f(z,x)| for d(.) = D_f(., y), both sides evaluated
/// independently; identically zero in exact arithmetic.
double three_point_residual(const ScalarFunction& f, const Vector& x, const Vector& y, const Vector& z);

/// D_f(x,y) - t (1 - beta t / 2) |grad f(x) - grad f(y)|^2 for t in
/// (0, 2/beta). Throws std::domain_error when the shifted point
/// x + t (grad f(y) - grad f(x)) leaves the domain, so a containment
/// failure is never confused with a property violation.
double descent_gap(const ScalarFunction& f, double beta, const Vector& x, const Vector& y, double t);

// ---------------------------------------------------------------------------
// Sampled property checks
// ---------------------------------------------------------------------------

/// Midpoint convexity over sampled pairs plus lambda_min(fd_hessian) >=
/// -1e-5 * (1 + |H|) at sampled points; both probes must pass.
Certificate convexity_check(const ScalarFunction& f, const OpenConvexDomain& domain,
                            std::uint64_t seed, int count);

/// Checks |fd_hessian(f)(x)| <= beta (1 + tol) at sampled points via the
/// spectral norm.
Certificate hessian_norm_check(const ScalarFunction& f, double beta, const OpenConvexDomain& domain,
                               std::uint64_t seed, int count);

}  // namespace coco

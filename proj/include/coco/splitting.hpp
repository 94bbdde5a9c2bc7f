#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "coco/functions.hpp"
#include "coco/moduli.hpp"

namespace coco {

/// Structured inclusion 0 in subdiff(phi)(x) + B(x). `beta` is the claimed
/// cocoercivity modulus of B (<Bx-By, x-y> >= beta |Bx-By|^2); when absent
/// the solver certifies one by sampling.
struct InclusionProblem {
    ProxFriendly phi;
    VectorOperator b_op;
    std::optional<double> beta;
    OpenConvexDomain domain;
    Vector x0;
};

enum class SolveMode { fixed_point, euler, rk4 };

/// Residuals are |x_k - prox_{mu phi}(x_k - mu B x_k)|; `converged` is the
/// tolerance stop, `diverged` flags non-finite iterates or residual blowup
/// past 1e6.
struct SolveTrace {
    std::vector<Vector> iterates;
    std::vector<double> residuals;
    double mu = 0.0;
    SolveMode mode = SolveMode::fixed_point;
    double dt = 0.0;  // 0 for fixed_point
    bool converged = false;
    bool diverged = false;
    double final_residual = 0.0;
};

/// |x - prox_{mu phi}(x - mu B x)|; zero exactly at solutions.
double fb_residual(const InclusionProblem& p, double mu, const Vector& x);

/// Fixed-point iteration x <- prox_{mu phi}(x - mu B x). Admissibility
/// mu < 2 beta is reported, not enforced; divergence runs are data.
SolveTrace forward_backward(const InclusionProblem& p, double mu, double tol = 1e-10,
                            long max_iter = 100000);

/// Explicit integration of xdot = prox_{mu phi}(x - mu B x) - x by the
/// convex-combination Euler step x <- (1-dt) x + dt prox(...) or classical
/// RK4 on the same field; stops early once the fixed-point residual drops
/// under tol. At dt = 1 the Euler trace reproduces forward_backward
/// exactly, arithmetic included.
SolveTrace dyn_integrate(const InclusionProblem& p, double mu, double dt, double t_end,
                         double tol = 1e-10, SolveMode mode = SolveMode::euler);

struct AdmissibilityReport {
    bool admissible = false;
    double mu = 0.0;
    double beta = 0.0;
    bool beta_estimated = false;  // false: user-claimed
    std::optional<ModulusReport> estimate;
};

/// mu in (0, 2 beta) against the claimed beta, or against a certified
/// estimate (the sampled cocoercivity ratio infimum of B) when no claim
/// was given.
AdmissibilityReport admissibility(const InclusionProblem& p, double mu, std::uint64_t seed = 42,
                                  int count = 2000);

/// CSV with header iter,t,x_0..x_{n-1},residual; floats at 17 significant
/// digits; the t column is left blank for fixed-point traces.
void write_trace_csv(std::ostream& os, const SolveTrace& trace);

}  // namespace coco

#include "coco/splitting.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace coco {

namespace {

constexpr double kDivergenceResidual = 1e6;

Vector fb_map(const InclusionProblem& p, double mu, const Vector& x) {
    return p.phi.prox(mu, (x - mu * p.b_op(x)).eval());
}

}  // namespace

double fb_residual(const InclusionProblem& p, double mu, const Vector& x) {
    if (!(mu > 0.0)) throw std::invalid_argument("fb_residual: mu must be > 0");
    return (x - fb_map(p, mu, x)).norm();
}

SolveTrace forward_backward(const InclusionProblem& p, double mu, double tol, long max_iter) {
    if (!(mu > 0.0)) throw std::invalid_argument("forward_backward: mu must be > 0");
    if (max_iter < 1) throw std::invalid_argument("forward_backward: max_iter must be >= 1");

    SolveTrace trace;
    trace.mu = mu;
    trace.mode = SolveMode::fixed_point;
    Vector x = p.x0;
    for (long k = 0; k < max_iter; ++k) {
        const Vector next = fb_map(p, mu, x);
        const double residual = (x - next).norm();
        trace.iterates.push_back(x);
        trace.residuals.push_back(residual);
        if (!std::isfinite(residual) || !is_finite(next)) {
            trace.diverged = true;
            break;
        }
        if (residual <= tol) {
            trace.converged = true;
            break;
        }
        if (residual > kDivergenceResidual) {
            trace.diverged = true;
            break;
        }
        x = next;
    }
    trace.final_residual = trace.residuals.empty() ? 0.0 : trace.residuals.back();
    return trace;
}

SolveTrace dyn_integrate(const InclusionProblem& p, double mu, double dt, double t_end, double tol,
                         SolveMode mode) {
    if (!(mu > 0.0)) throw std::invalid_argument("dyn_integrate: mu must be > 0");
    if (!(dt > 0.0 && dt <= 1.0)) throw std::invalid_argument("dyn_integrate: dt must lie in (0, 1]");
    if (!(t_end > 0.0)) throw std::invalid_argument("dyn_integrate: t_end must be > 0");
    if (mode == SolveMode::fixed_point)
        throw std::invalid_argument("dyn_integrate: mode must be euler or rk4");

    // field of the continuous system: g(x) = prox_{mu phi}(x - mu Bx) - x
    auto field = [&](const Vector& x) { return Vector(fb_map(p, mu, x) - x); };

    SolveTrace trace;
    trace.mu = mu;
    trace.mode = mode;
    trace.dt = dt;
    const long steps = static_cast<long>(std::ceil(t_end / dt - 1e-12));
    Vector x = p.x0;
    for (long k = 0; k <= steps; ++k) {
        const Vector mapped = fb_map(p, mu, x);
        const double residual = (x - mapped).norm();
        trace.iterates.push_back(x);
        trace.residuals.push_back(residual);
        if (!std::isfinite(residual)) {
            trace.diverged = true;
            break;
        }
        if (residual <= tol) {
            trace.converged = true;
            break;
        }
        if (residual > kDivergenceResidual) {
            trace.diverged = true;
            break;
        }
        if (k == steps) break;
        if (mode == SolveMode::euler) {
            // convex-combination form: reduces to the fixed-point map at dt=1
            x = (1.0 - dt) * x + dt * mapped;
        } else {
            const Vector k1 = mapped - x;
            const Vector k2 = field((x + (0.5 * dt) * k1).eval());
            const Vector k3 = field((x + (0.5 * dt) * k2).eval());
            const Vector k4 = field((x + dt * k3).eval());
            x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        if (!is_finite(x)) {
            trace.diverged = true;
            break;
        }
    }
    trace.final_residual = trace.residuals.empty() ? 0.0 : trace.residuals.back();
    return trace;
}

AdmissibilityReport admissibility(const InclusionProblem& p, double mu, std::uint64_t seed, int count) {
    AdmissibilityReport report;
    report.mu = mu;
    if (p.beta) {
        if (!(*p.beta > 0.0)) throw std::invalid_argument("admissibility: claimed beta must be > 0");
        report.beta = *p.beta;
        report.beta_estimated = false;
    } else {
        const ModulusReport est = estimate_moduli(p.b_op, p.domain, seed, count);
        if (!est.has_coco())
            throw std::runtime_error("admissibility: no admissible pairs to certify beta");
        report.beta = est.coco_inf;
        report.beta_estimated = true;
        report.estimate = est;
    }
    report.admissible = mu > 0.0 && mu < 2.0 * report.beta;
    return report;
}

void write_trace_csv(std::ostream& os, const SolveTrace& trace) {
    const Eigen::Index n = trace.iterates.empty() ? 0 : trace.iterates.front().size();
    os << "iter,t";
    for (Eigen::Index i = 0; i < n; ++i) os << ",x_" << i;
    os << ",residual\n";
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    for (std::size_t k = 0; k < trace.iterates.size(); ++k) {
        os << k << ",";
        if (trace.mode != SolveMode::fixed_point) os << fmt(static_cast<double>(k) * trace.dt);
        for (Eigen::Index i = 0; i < n; ++i) os << "," << fmt(trace.iterates[k][i]);
        os << "," << fmt(trace.residuals[k]) << "\n";
    }
}

}  // namespace coco

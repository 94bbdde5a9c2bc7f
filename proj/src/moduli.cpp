#include "coco/moduli.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coco/jacobi.hpp"
#include "coco/rng.hpp"

namespace coco {

ModulusReport estimate_moduli(const VectorOperator& t, const OpenConvexDomain& domain,
                              std::uint64_t seed, int count, const std::vector<double>& scales) {
    if (count < 2) throw std::invalid_argument("estimate_moduli: count must be >= 2");
    const std::vector<PairSample> pairs = sample_pairs(domain, seed, count, scales);

    ModulusReport report;
    double worst_monotone = 0.0;
    for (const PairSample& p : pairs) {
        const Vector tx = t(p.x);
        const Vector ty = t(p.y);
        const Vector dt = tx - ty;
        const Vector dx = p.x - p.y;
        const double dt_norm = dt.norm();
        const double dx_norm = dx.norm();
        if (dt_norm < 1e-12 * (1.0 + tx.norm())) {
            ++report.pairs_skipped;
            continue;
        }
        ++report.pairs_used;

        const double lip = dt_norm / dx_norm;
        if (!report.lip_witness || lip > report.lipschitz_sup) {
            report.lipschitz_sup = lip;
            report.lip_witness = p;
        }

        const double inner = dt.dot(dx);
        const double coco = inner / dt.dot(dt);
        if (!report.coco_witness || coco < report.coco_inf) {
            report.coco_inf = coco;
            report.coco_witness = p;
        }
        const double mono_tol = kViolationTol * (1.0 + dt_norm * dx_norm);
        if (inner < -mono_tol && inner < worst_monotone) {
            worst_monotone = inner;
            report.monotone_violation = p;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------

double bregman(const ScalarFunction& f, const Vector& x, const Vector& y) {
    const double fx = f(x);
    const double fy = f(y);
    const Vector gy = gradient_of(f, y);
    return fx - fy - gy.dot(x - y);
}

double three_point_residual(const ScalarFunction& f, const Vector& x, const Vector& y, const Vector& z) {
    // d(.) = D_f(., y) has gradient grad f(.) - grad f(y).
    const double d_z = bregman(f, z, y);
    const double d_x = bregman(f, x, y);
    const Vector grad_d_x = gradient_of(f, x) - gradient_of(f, y);
    const double lhs = d_z - d_x - grad_d_x.dot(z - x);
    const double rhs = bregman(f, z, x);
    return std::abs(lhs - rhs);
}

double descent_gap(const ScalarFunction& f, double beta, const Vector& x, const Vector& y, double t) {
    if (!(beta > 0.0)) throw std::invalid_argument("descent_gap: beta must be > 0");
    if (!(t > 0.0 && t < 2.0 / beta)) throw std::invalid_argument("descent_gap: t must lie in (0, 2/beta)");
    const Vector gx = gradient_of(f, x);
    const Vector gy = gradient_of(f, y);
    const Vector shifted = x + t * (gy - gx);
    if (!f.domain.contains(shifted))
        throw std::domain_error("descent_gap: shifted point leaves the domain");
    const double df = bregman(f, x, y);
    const double bound = t * (1.0 - beta * t / 2.0) * (gx - gy).squaredNorm();
    return df - bound;
}

// ---------------------------------------------------------------------------

Certificate convexity_check(const ScalarFunction& f, const OpenConvexDomain& domain,
                            std::uint64_t seed, int count) {
    if (count < 1) throw std::invalid_argument("convexity_check: count must be >= 1");
    Certificate cert;
    cert.claim = ClaimDescriptor{f.label, "convex", 0.0, domain.describe()};
    cert.worst_margin = -std::numeric_limits<double>::infinity();

    // Constant Hessian: eigenvalues decide the claim exactly.
    if (f.constant_hessian) {
        const SpectralBounds sb = spectral_bounds(*f.constant_hessian);
        cert.worst_margin = -sb.lambda_min;
        if (sb.lambda_min >= -1e-12 * (1.0 + f.constant_hessian->norm())) {
            cert.verdict = Verdict::proved;
            cert.note = "constant Hessian with eigenvalues in [" + std::to_string(sb.lambda_min) +
                        ", " + std::to_string(sb.lambda_max) + "]";
        } else {
            cert.verdict = Verdict::falsified;
            const Box bbox = domain.bounding_box();
            cert.witness_point = 0.5 * (bbox.lower + bbox.upper);
            cert.note = "constant Hessian has eigenvalue " + std::to_string(sb.lambda_min);
        }
        return cert;
    }

    // Probe 1: midpoint convexity on sampled pairs.
    const std::vector<PairSample> pairs = sample_pairs(domain, derive_seed(seed, 11), count);
    for (const PairSample& p : pairs) {
        const double fx = f(p.x);
        const double fy = f(p.y);
        const Vector mid = 0.5 * (p.x + p.y);
        const double fmid = f(mid);
        const double margin = fmid - 0.5 * (fx + fy);
        const double tol = kViolationTol * (1.0 + std::abs(fx) + std::abs(fy));
        cert.samples_used++;
        cert.worst_margin = std::max(cert.worst_margin, margin);
        if (margin > tol) {
            cert.verdict = Verdict::falsified;
            cert.witness_pair = p;
            cert.worst_margin = margin;
            cert.note = "midpoint convexity violated";
            return cert;
        }
    }

    // Probe 2: lambda_min of the sampled finite-difference Hessians.
    const std::vector<Vector> points = sample_points(domain, derive_seed(seed, 12), count);
    for (const Vector& x : points) {
        const Matrix h = fd_hessian(f, x);
        const SpectralBounds sb = spectral_bounds(h);
        const double scale = std::max(std::abs(sb.lambda_min), std::abs(sb.lambda_max));
        const double tol = 1e-5 * (1.0 + scale);
        cert.samples_used++;
        cert.worst_margin = std::max(cert.worst_margin, -sb.lambda_min);
        if (sb.lambda_min < -tol) {
            cert.verdict = Verdict::falsified;
            cert.witness_point = x;
            cert.worst_margin = -sb.lambda_min;
            cert.note = "negative Hessian eigenvalue " + std::to_string(sb.lambda_min);
            return cert;
        }
    }

    cert.verdict = Verdict::consistent;
    return cert;
}

Certificate hessian_norm_check(const ScalarFunction& f, double beta, const OpenConvexDomain& domain,
                               std::uint64_t seed, int count) {
    if (!(beta > 0.0)) throw std::invalid_argument("hessian_norm_check: beta must be > 0");
    if (count < 1) throw std::invalid_argument("hessian_norm_check: count must be >= 1");
    Certificate cert;
    cert.claim = ClaimDescriptor{f.label, "hessian_norm_bound", beta, domain.describe()};
    cert.worst_margin = -std::numeric_limits<double>::infinity();

    if (f.constant_hessian) {
        const double norm = spectral_norm(*f.constant_hessian);
        cert.worst_margin = norm / beta - 1.0;
        if (cert.worst_margin <= kViolationTol) {
            cert.verdict = Verdict::proved;
            cert.note = "constant Hessian with spectral norm " + std::to_string(norm);
        } else {
            cert.verdict = Verdict::falsified;
            const Box bbox = domain.bounding_box();
            cert.witness_point = 0.5 * (bbox.lower + bbox.upper);
            cert.note = "constant Hessian norm " + std::to_string(norm) + " exceeds bound";
        }
        return cert;
    }

    const std::vector<Vector> points = sample_points(domain, derive_seed(seed, 13), count);
    for (const Vector& x : points) {
        const double norm = spectral_norm(fd_hessian(f, x));
        const double margin = norm / beta - 1.0;
        cert.samples_used++;
        cert.worst_margin = std::max(cert.worst_margin, margin);
        if (margin > kViolationTol) {
            cert.verdict = Verdict::falsified;
            cert.witness_point = x;
            cert.worst_margin = margin;
            cert.note = "Hessian norm " + std::to_string(norm) + " exceeds bound";
            return cert;
        }
    }
    cert.verdict = Verdict::consistent;
    return cert;
}

}  // namespace coco

#include "coco/certifier.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "coco/jacobi.hpp"
#include "coco/rng.hpp"

namespace coco {

namespace {

Certificate lipschitz_certificate(const ModulusReport& report, const std::string& subject,
                                  const std::string& domain_desc, double beta) {
    Certificate cert;
    cert.claim = ClaimDescriptor{subject, "lipschitz", beta, domain_desc};
    cert.samples_used = report.pairs_used;
    cert.worst_margin = report.lipschitz_sup / beta - 1.0;
    if (report.lipschitz_sup > beta * (1.0 + kViolationTol)) {
        cert.verdict = Verdict::falsified;
        cert.witness_pair = report.lip_witness;
        cert.note = "sampled Lipschitz ratio " + std::to_string(report.lipschitz_sup);
    } else {
        cert.verdict = Verdict::consistent;
    }
    return cert;
}

Certificate cocoercive_certificate(const ModulusReport& report, const std::string& subject,
                                   const std::string& domain_desc, double modulus) {
    Certificate cert;
    cert.claim = ClaimDescriptor{subject, "cocoercive", modulus, domain_desc};
    cert.samples_used = report.pairs_used;
    if (report.has_coco()) cert.worst_margin = 1.0 - report.coco_inf / modulus;
    if (report.has_coco() && report.coco_inf < modulus * (1.0 - kViolationTol)) {
        cert.verdict = Verdict::falsified;
        cert.witness_pair = report.coco_witness;
        cert.note = "sampled cocoercivity ratio " + std::to_string(report.coco_inf);
    } else {
        cert.verdict = Verdict::consistent;
    }
    return cert;
}

}  // namespace

BHReport bh_check(const ScalarFunction& f, const OpenConvexDomain& domain, double beta,
                  std::uint64_t seed, int count) {
    if (!(beta > 0.0)) throw std::invalid_argument("bh_check: beta must be > 0");
    if (count < 2) throw std::invalid_argument("bh_check: count must be >= 2");

    BHReport report;
    report.beta = beta;

    // (a) and (c) share one sampled modulus pass over grad f.
    const VectorOperator grad = gradient_operator(f);
    const ModulusReport moduli = estimate_moduli(grad, domain, derive_seed(seed, 21), count);
    report.verdict_a = lipschitz_certificate(moduli, grad.label, domain.describe(), beta);
    report.verdict_c = cocoercive_certificate(moduli, grad.label, domain.describe(), 1.0 / beta);

    // (b) convexity of (beta/2)|x|^2 - f(x).
    ScalarFunction g;
    g.domain = f.domain;
    g.label = f.label + "_bh_gap";
    g.value = [f, beta](const Vector& x) { return 0.5 * beta * x.squaredNorm() - f(x); };
    if (f.has_gradient())
        g.gradient = [f, beta](const Vector& x) { return Vector(beta * x - f.eval_gradient(x)); };
    if (f.has_hessian())
        g.hessian = [f, beta](const Vector& x) {
            return Matrix(beta * Matrix::Identity(x.size(), x.size()) - f.eval_hessian(x));
        };
    if (f.constant_hessian) {
        const Eigen::Index n = f.constant_hessian->rows();
        g.constant_hessian = Matrix(beta * Matrix::Identity(n, n) - *f.constant_hessian);
    }
    report.verdict_b = convexity_check(g, domain, derive_seed(seed, 22), count);

    // Descent-inequality spot checks at admissible (x, y, t) triples.
    const std::vector<PairSample> pairs =
        sample_pairs(domain, derive_seed(seed, 23), std::min(count, 64));
    report.descent_worst_gap = std::numeric_limits<double>::infinity();
    for (const PairSample& p : pairs) {
        for (double frac : {0.05, 0.25, 0.5, 0.75, 0.95}) {
            const double t = frac * 2.0 / beta;
            try {
                const double gap = descent_gap(f, beta, p.x, p.y, t);
                report.descent_worst_gap = std::min(report.descent_worst_gap, gap);
                ++report.descent_checks;
            } catch (const std::domain_error&) {
                // shifted point left the domain: skipped, not a violation
            }
        }
    }
    if (report.descent_checks == 0) report.descent_worst_gap = 0.0;

    const bool fa = report.verdict_a.verdict == Verdict::falsified;
    const bool fb = report.verdict_b.verdict == Verdict::falsified;
    const bool fc = report.verdict_c.verdict == Verdict::falsified;
    report.consistency = (fa == fb) && (fb == fc);
    return report;
}

LocalCocoReport local_coco_search(const ScalarFunction& f, const OpenConvexDomain& domain,
                                  const Vector& x, std::uint64_t seed, int count) {
    if (!domain.contains(x)) throw std::domain_error("local_coco_search: center outside the domain");

    LocalCocoReport report;
    report.center = x;
    const VectorOperator grad = gradient_operator(f);

    double radius = 0.25 * domain.safe_radius(x);
    for (int level = 0; level < 21; ++level) {
        if (radius < 1e-12) {
            report.radius = radius;
            report.certificate.claim =
                ClaimDescriptor{grad.label, "locally_cocoercive", report.beta_local, "ball around center"};
            report.certificate.verdict = Verdict::falsified;
            report.certificate.note = "falsified at all scales (radius underflow)";
            return report;
        }
        const OpenConvexDomain ball = OpenConvexDomain::ball(x, radius);
        const ModulusReport moduli = estimate_moduli(grad, ball, derive_seed(seed, 31 + level), count);
        const double beta_local = moduli.lipschitz_sup;
        const double modulus = 1.0 / beta_local;
        Certificate cert = cocoercive_certificate(moduli, grad.label, ball.describe(), modulus);
        const bool ok = cert.verdict == Verdict::consistent && !moduli.monotone_violation;
        report.history.push_back(LocalCocoStep{radius, beta_local, ok});
        report.radius = radius;
        report.beta_local = beta_local;
        report.certificate = std::move(cert);
        if (ok) return report;
        radius *= 0.5;
    }
    return report;
}

Matrix orthonormal_basis(const Matrix& columns) {
    const Eigen::Index n = columns.rows();
    Matrix q(n, columns.cols());
    Eigen::Index rank = 0;
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        Vector v = columns.col(j);
        const double original = v.norm();
        for (Eigen::Index k = 0; k < rank; ++k) v -= q.col(k).dot(v) * q.col(k);
        // second orthogonalization pass for numerical safety
        for (Eigen::Index k = 0; k < rank; ++k) v -= q.col(k).dot(v) * q.col(k);
        const double norm = v.norm();
        if (norm > 1e-10 * (1.0 + original)) {
            q.col(rank) = v / norm;
            ++rank;
        }
    }
    return q.leftCols(rank);
}

Certificate slice_check(const ScalarFunction& f, const OpenConvexDomain& domain, const Vector& x,
                        const Vector& y, std::uint64_t seed, int extra_dirs) {
    if (!domain.contains(x) || !domain.contains(y))
        throw std::domain_error("slice_check: slice anchors must lie in the domain");
    if ((x - y).norm() < 1e-14) throw std::invalid_argument("slice_check: x and y must differ");

    Certificate cert;
    cert.claim = ClaimDescriptor{f.label, "slice_projection_bound", 0.0, domain.describe()};

    const Vector gx = gradient_of(f, x);
    const Vector gy = gradient_of(f, y);
    const Vector dg = gx - gy;
    const double full_norm = dg.norm();
    const Eigen::Index n = x.size();

    Rng rng(derive_seed(seed, 41));
    std::vector<Matrix> spans;
    {
        Matrix base(n, 2);
        base.col(0) = x;
        base.col(1) = y;
        spans.push_back(base);
    }
    for (int k = 0; k < extra_dirs; ++k) {
        Matrix m(n, 3);
        m.col(0) = x;
        m.col(1) = y;
        m.col(2) = rng.unit_direction(n);
        spans.push_back(m);
    }

    // (1) every slice contracts the gradient displacement.
    for (const Matrix& span : spans) {
        const Matrix q = orthonormal_basis(span);
        const double sliced = (q.transpose() * dg).norm();
        const double margin = sliced - full_norm;
        cert.samples_used++;
        cert.worst_margin = std::max(cert.worst_margin, margin);
        if (margin > kViolationTol * (1.0 + full_norm)) {
            cert.verdict = Verdict::falsified;
            cert.witness_pair = PairSample{x, y, (x - y).norm()};
            cert.note = "projection exceeded the ambient gradient displacement";
            return cert;
        }
    }

    // (2) the slice enriched with the gradient difference attains equality.
    {
        Matrix m(n, 3);
        m.col(0) = x;
        m.col(1) = y;
        m.col(2) = dg;
        const Matrix q = orthonormal_basis(m);
        const double sliced = (q.transpose() * dg).norm();
        const double deviation = std::abs(sliced - full_norm);
        cert.samples_used++;
        if (deviation > kViolationTol * (1.0 + full_norm)) {
            cert.verdict = Verdict::falsified;
            cert.witness_pair = PairSample{x, y, (x - y).norm()};
            cert.note = "equality failed on the enriched slice";
            return cert;
        }
    }

    cert.verdict = Verdict::consistent;
    return cert;
}

// ---------------------------------------------------------------------------

double grid_max_second_derivative(const std::function<double(double)>& f2, double lo, double hi,
                                  int points) {
    if (points < 2 || !(hi > lo)) throw std::invalid_argument("grid_max_second_derivative: bad grid");
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < points; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
        best = std::max(best, std::abs(f2(x)));
    }
    return best;
}

std::vector<CatalogEntry> convex_catalog() {
    std::vector<CatalogEntry> catalog;

    {
        // unit quadratic in R^2
        const Matrix q = Matrix::Identity(2, 2);
        const Vector b = Vector::Zero(2);
        auto dom = OpenConvexDomain::box(Vector::Constant(2, -2.0), Vector::Constant(2, 2.0));
        catalog.push_back(CatalogEntry{quadratic_function(q, b, dom, "quad_unit"), 1.0});
    }
    {
        // anisotropic diagonal quadratic in R^2
        Matrix q(2, 2);
        q << 1.0, 0.0, 0.0, 4.0;
        const Vector b = Vector::Zero(2);
        auto dom = OpenConvexDomain::box(Vector::Constant(2, -2.0), Vector::Constant(2, 2.0));
        catalog.push_back(CatalogEntry{quadratic_function(q, b, dom, "quad_diag14"), 4.0});
    }
    {
        // dense psd quadratic with affine part in R^3
        Matrix q(3, 3);
        q << 3.0, 1.0, 0.5,
             1.0, 2.0, 0.25,
             0.5, 0.25, 1.5;
        Vector b(3);
        b << 0.5, -1.0, 0.25;
        auto dom = OpenConvexDomain::ball(Vector::Zero(3), 2.0);
        ScalarFunction f = quadratic_function(q, b, dom, "quad_dense3");
        const double beta_star = spectral_bounds(q).lambda_max;
        catalog.push_back(CatalogEntry{std::move(f), beta_star});
    }
    {
        // example31 restricted to an interval bounded away from the kink,
        // where the curvature supremum is finite
        ScalarFunction f = example31_function();
        f.domain = OpenConvexDomain::interval(0.5, 3.5);
        f.label = "example31_(0.5,3.5)";
        const double beta_star =
            grid_max_second_derivative([](double x) { return example31_second_derivative(x); }, 0.5, 3.5);
        catalog.push_back(CatalogEntry{std::move(f), beta_star});
    }

    return catalog;
}

}  // namespace coco

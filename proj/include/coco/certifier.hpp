#pragma once

#include <cstdint>
#include <vector>

#include "coco/moduli.hpp"

namespace coco {

/// Joint check of the three equivalent statements for (f, domain, beta):
///   (a) grad f is beta-Lipschitz          (sampled lipschitz_sup <= beta)
///   (b) (beta/2)|x|^2 - f(x) is convex    (convexity_check)
///   (c) grad f is 1/beta-cocoercive       (sampled coco_inf >= 1/beta)
/// `consistency` is false when falsified and consistent verdicts mix --
/// for a gradient field of a convex function that indicates a tolerance
/// problem; for a non-gradient field it exposes the missing hypothesis.
struct BHReport {
    double beta = 0.0;
    Certificate verdict_a;
    Certificate verdict_b;
    Certificate verdict_c;
    bool consistency = true;
    double descent_worst_gap = 0.0;
    long descent_checks = 0;
};

BHReport bh_check(const ScalarFunction& f, const OpenConvexDomain& domain, double beta,
                  std::uint64_t seed, int count);

struct LocalCocoStep {
    double radius;
    double beta_local;
    bool consistent;
};

/// Search for a cocoercivity neighborhood around x: estimate the local
/// Lipschitz constant of grad f on a ball, test cocoercivity with the
/// reciprocal modulus, halve the radius on falsification (at most 20
/// times). Radius underflow below 1e-12 is reported as
/// falsified-at-all-scales rather than thrown.
struct LocalCocoReport {
    Vector center;
    double radius = 0.0;
    double beta_local = 0.0;
    Certificate certificate;
    std::vector<LocalCocoStep> history;
};

LocalCocoReport local_coco_search(const ScalarFunction& f, const OpenConvexDomain& domain,
                                  const Vector& x, std::uint64_t seed, int count = 4000);

/// Finite-dimensional slice reduction: for subspaces F spanned by {x, y}
/// plus random extra directions, checks the projection bound
///   |P_F grad f(x) - P_F grad f(y)| <= |grad f(x) - grad f(y)|
/// on every F, and equality for the enriched subspace that contains the
/// gradient difference.
Certificate slice_check(const ScalarFunction& f, const OpenConvexDomain& domain, const Vector& x,
                        const Vector& y, std::uint64_t seed, int extra_dirs);

/// Orthonormal basis of span{columns} by modified Gram-Schmidt with rank
/// tolerance 1e-10; returned matrix has one column per surviving
/// direction.
Matrix orthonormal_basis(const Matrix& columns);

// ---------------------------------------------------------------------------
// Certification catalog
// ---------------------------------------------------------------------------

/// A convex catalog entry together with the brute-force oracle constant
/// beta_star = max over a dense grid of the analytic Hessian spectral
/// norm (exact for constant-Hessian quadratics).
struct CatalogEntry {
    ScalarFunction f;
    double beta_star;
};

/// Convex functions used by the certification and acceptance batteries.
std::vector<CatalogEntry> convex_catalog();

/// Dense-grid maximum of |f''| over the closed interval [lo, hi], using
/// the raw 1-d second-derivative formula `f2`.
double grid_max_second_derivative(const std::function<double(double)>& f2, double lo, double hi,
                                  int points = 4001);

}  // namespace coco

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace coco {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

bool is_finite(const Vector& v);

/// Open axis-aligned box {x : lower < x < upper componentwise}.
struct Box {
    Vector lower;
    Vector upper;
};

/// Open Euclidean ball {x : |x - center| < radius}.
struct Ball {
    Vector center;
    double radius;
};

/// Open convex subset of R^n: a box, a ball, or a finite intersection of
/// those. Immutable after construction; construction rejects empty sets.
/// Membership uses strict inequalities with exact float comparisons --
/// finite-difference stencils elsewhere stay at <= safe_radius/4 so the
/// openness of the set never becomes a numerical problem.
class OpenConvexDomain {
public:
    /// Default state is an empty placeholder (dimension 0); assign a real
    /// shape via the named constructors before use.
    OpenConvexDomain() = default;

    static OpenConvexDomain box(Vector lower, Vector upper);
    static OpenConvexDomain ball(Vector center, double radius);
    static OpenConvexDomain intersection(std::vector<OpenConvexDomain> members);

    /// 1-d convenience: open interval (lo, hi).
    static OpenConvexDomain interval(double lo, double hi);

    Eigen::Index dimension() const;
    bool contains(const Vector& x) const;

    /// Exact distance from x to the complement; the closed ball of this
    /// radius around x is inside the set. Throws std::domain_error when
    /// x is not a member.
    double safe_radius(const Vector& x) const;

    /// Diameter of the set (an upper bound for intersections).
    double diameter() const;

    /// Axis-aligned bounding box (exact for box/ball, intersected for
    /// intersections).
    Box bounding_box() const;

    std::string describe() const;

    bool is_intersection() const { return std::holds_alternative<std::vector<OpenConvexDomain>>(shape_); }
    const std::variant<Box, Ball, std::vector<OpenConvexDomain>>& shape() const { return shape_; }

private:
    std::variant<Box, Ball, std::vector<OpenConvexDomain>> shape_;
};

/// A sampled pair of distinct interior points; `scale` records the
/// separation magnitude class the pair was drawn at.
struct PairSample {
    Vector x;
    Vector y;
    double scale = 0.0;
};

/// Deterministic interior points. Boxes sample directly; balls and
/// intersections use rejection sampling from the bounding box with a cap
/// of 10,000 attempts per point (exceeding the cap signals a degenerate
/// domain and throws).
std::vector<Vector> sample_points(const OpenConvexDomain& domain, std::uint64_t seed, int count);

/// Default pair-separation ladder, relative to the domain diameter.
const std::vector<double>& default_scale_ladder();

/// Deterministic point pairs: alternates far pairs (two independent
/// interior points) with local pairs y = x + scale*diameter*direction,
/// cycling through the scale ladder and shrinking the step as needed to
/// stay inside the open set. Pairs closer than 1e-14 are discarded.
std::vector<PairSample> sample_pairs(const OpenConvexDomain& domain, std::uint64_t seed, int count,
                                     const std::vector<double>& scales = default_scale_ladder());

}  // namespace coco

#include "coco/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "coco/rng.hpp"

namespace coco {

bool is_finite(const Vector& v) {
    return v.allFinite();
}

namespace {

void require_dimension(const OpenConvexDomain& d, const Vector& x) {
    if (x.size() != d.dimension())
        throw std::invalid_argument("dimension mismatch: point has " + std::to_string(x.size()) +
                                    " coordinates, domain expects " + std::to_string(d.dimension()));
}

Box intersect_boxes(const Box& a, const Box& b) {
    Box out;
    out.lower = a.lower.cwiseMax(b.lower);
    out.upper = a.upper.cwiseMin(b.upper);
    return out;
}

bool box_nonempty(const Box& b) {
    return (b.lower.array() < b.upper.array()).all();
}

// Euclidean projection onto the closure of a box/ball leaf.
Vector project_closure(const std::variant<Box, Ball, std::vector<OpenConvexDomain>>& shape, const Vector& x) {
    if (const auto* bx = std::get_if<Box>(&shape))
        return x.cwiseMax(bx->lower).cwiseMin(bx->upper);
    const auto& bl = std::get<Ball>(shape);
    Vector d = x - bl.center;
    const double n = d.norm();
    if (n <= bl.radius) return x;
    return bl.center + d * (bl.radius / n);
}

// Looks for one strictly interior point of the intersection: rejection
// sampling from the bounding box first, then cyclic projections for thin
// sets. Returns false when no witness is found (set treated as empty).
bool find_interior_witness(const std::vector<OpenConvexDomain>& members, const Box& bbox, Vector& out) {
    const Eigen::Index n = bbox.lower.size();
    auto inside_all = [&](const Vector& p) {
        return std::all_of(members.begin(), members.end(),
                           [&](const OpenConvexDomain& m) { return m.contains(p); });
    };

    Rng rng(0xC0C0ull);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Vector p(n);
        for (Eigen::Index i = 0; i < n; ++i) p[i] = rng.uniform(bbox.lower[i], bbox.upper[i]);
        if (inside_all(p)) {
            out = p;
            return true;
        }
    }

    Vector p = 0.5 * (bbox.lower + bbox.upper);
    for (int round = 0; round < 512; ++round) {
        for (const auto& m : members) p = project_closure(m.shape(), p);
        if (inside_all(p)) {
            out = p;
            return true;
        }
    }
    return false;
}

}  // namespace

OpenConvexDomain OpenConvexDomain::box(Vector lower, Vector upper) {
    if (lower.size() == 0 || lower.size() != upper.size())
        throw std::invalid_argument("box: lower/upper must share a dimension n >= 1");
    if (!is_finite(lower) || !is_finite(upper))
        throw std::invalid_argument("box: bounds must be finite");
    if (!(lower.array() < upper.array()).all())
        throw std::invalid_argument("box: requires lower < upper componentwise");
    OpenConvexDomain d;
    d.shape_ = Box{std::move(lower), std::move(upper)};
    return d;
}

OpenConvexDomain OpenConvexDomain::ball(Vector center, double radius) {
    if (center.size() == 0) throw std::invalid_argument("ball: dimension must be >= 1");
    if (!is_finite(center) || !std::isfinite(radius) || radius <= 0.0)
        throw std::invalid_argument("ball: requires finite center and radius > 0");
    OpenConvexDomain d;
    d.shape_ = Ball{std::move(center), radius};
    return d;
}

OpenConvexDomain OpenConvexDomain::intersection(std::vector<OpenConvexDomain> members) {
    if (members.empty()) throw std::invalid_argument("intersection: needs at least one member");
    // Flatten nested intersections so members are box/ball leaves.
    std::vector<OpenConvexDomain> flat;
    for (auto& m : members) {
        if (m.is_intersection()) {
            for (auto& inner : std::get<std::vector<OpenConvexDomain>>(m.shape_)) flat.push_back(inner);
        } else {
            flat.push_back(m);
        }
    }
    const Eigen::Index n = flat.front().dimension();
    for (const auto& m : flat)
        if (m.dimension() != n) throw std::invalid_argument("intersection: members must share a dimension");
    if (flat.size() == 1) return flat.front();

    Box bbox = flat.front().bounding_box();
    for (std::size_t i = 1; i < flat.size(); ++i) bbox = intersect_boxes(bbox, flat[i].bounding_box());
    if (!box_nonempty(bbox)) throw std::invalid_argument("intersection: empty set rejected");
    Vector witness;
    if (!find_interior_witness(flat, bbox, witness))
        throw std::invalid_argument("intersection: empty set rejected (no interior point found)");

    OpenConvexDomain d;
    d.shape_ = std::move(flat);
    return d;
}

OpenConvexDomain OpenConvexDomain::interval(double lo, double hi) {
    Vector l(1), u(1);
    l[0] = lo;
    u[0] = hi;
    return box(std::move(l), std::move(u));
}

Eigen::Index OpenConvexDomain::dimension() const {
    if (const auto* b = std::get_if<Box>(&shape_)) return b->lower.size();
    if (const auto* b = std::get_if<Ball>(&shape_)) return b->center.size();
    return std::get<std::vector<OpenConvexDomain>>(shape_).front().dimension();
}

bool OpenConvexDomain::contains(const Vector& x) const {
    require_dimension(*this, x);
    if (!is_finite(x)) return false;
    if (const auto* b = std::get_if<Box>(&shape_))
        return (x.array() > b->lower.array()).all() && (x.array() < b->upper.array()).all();
    if (const auto* b = std::get_if<Ball>(&shape_)) return (x - b->center).norm() < b->radius;
    const auto& members = std::get<std::vector<OpenConvexDomain>>(shape_);
    return std::all_of(members.begin(), members.end(),
                       [&](const OpenConvexDomain& m) { return m.contains(x); });
}

double OpenConvexDomain::safe_radius(const Vector& x) const {
    if (!contains(x)) throw std::domain_error("safe_radius: point is not in the open set");
    if (const auto* b = std::get_if<Box>(&shape_)) {
        double r = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < x.size(); ++i)
            r = std::min({r, x[i] - b->lower[i], b->upper[i] - x[i]});
        return r;
    }
    if (const auto* b = std::get_if<Ball>(&shape_)) return b->radius - (x - b->center).norm();
    const auto& members = std::get<std::vector<OpenConvexDomain>>(shape_);
    double r = std::numeric_limits<double>::infinity();
    for (const auto& m : members) r = std::min(r, m.safe_radius(x));
    return r;
}

double OpenConvexDomain::diameter() const {
    const Box b = bounding_box();
    return (b.upper - b.lower).norm();
}

Box OpenConvexDomain::bounding_box() const {
    if (const auto* b = std::get_if<Box>(&shape_)) return *b;
    if (const auto* b = std::get_if<Ball>(&shape_)) {
        Box out;
        out.lower = b->center.array() - b->radius;
        out.upper = b->center.array() + b->radius;
        return out;
    }
    const auto& members = std::get<std::vector<OpenConvexDomain>>(shape_);
    Box out = members.front().bounding_box();
    for (std::size_t i = 1; i < members.size(); ++i) out = intersect_boxes(out, members[i].bounding_box());
    return out;
}

std::string OpenConvexDomain::describe() const {
    std::ostringstream os;
    if (const auto* b = std::get_if<Box>(&shape_)) {
        os << "box(n=" << b->lower.size() << ")";
    } else if (const auto* b = std::get_if<Ball>(&shape_)) {
        os << "ball(n=" << b->center.size() << ", r=" << b->radius << ")";
    } else {
        const auto& members = std::get<std::vector<OpenConvexDomain>>(shape_);
        os << "intersection(" << members.size() << " members, n=" << dimension() << ")";
    }
    return os.str();
}

namespace {

constexpr int kRejectionCap = 10000;

Vector draw_point(const OpenConvexDomain& domain, const Box& bbox, Rng& rng) {
    const Eigen::Index n = bbox.lower.size();
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        Vector p(n);
        for (Eigen::Index i = 0; i < n; ++i) p[i] = rng.uniform(bbox.lower[i], bbox.upper[i]);
        if (domain.contains(p)) return p;
    }
    throw std::runtime_error("sample_points: rejection cap exceeded (degenerate domain)");
}

}  // namespace

std::vector<Vector> sample_points(const OpenConvexDomain& domain, std::uint64_t seed, int count) {
    if (count < 1) throw std::invalid_argument("sample_points: count must be >= 1");
    Rng rng(derive_seed(seed, 0));
    const Box bbox = domain.bounding_box();
    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(draw_point(domain, bbox, rng));
    return out;
}

const std::vector<double>& default_scale_ladder() {
    static const std::vector<double> ladder = {1e-1, 1e-2, 1e-4, 1e-6};
    return ladder;
}

std::vector<PairSample> sample_pairs(const OpenConvexDomain& domain, std::uint64_t seed, int count,
                                     const std::vector<double>& scales) {
    if (count < 1) throw std::invalid_argument("sample_pairs: count must be >= 1");
    if (scales.empty()) throw std::invalid_argument("sample_pairs: scale ladder must be nonempty");
    for (double s : scales)
        if (!(s > 0.0)) throw std::invalid_argument("sample_pairs: scales must be positive");

    Rng rng(derive_seed(seed, 1));
    const Box bbox = domain.bounding_box();
    const double diam = domain.diameter();
    constexpr double kDegenerate = 1e-14;

    std::vector<PairSample> out;
    out.reserve(static_cast<std::size_t>(count));
    std::size_t local_index = 0;
    int guard = 0;
    while (out.size() < static_cast<std::size_t>(count)) {
        if (++guard > 100 * count)
            throw std::runtime_error("sample_pairs: could not draw non-degenerate pairs");
        const bool far_pair = (out.size() % 2 == 0);
        if (far_pair) {
            Vector x = draw_point(domain, bbox, rng);
            Vector y = draw_point(domain, bbox, rng);
            const double sep = (x - y).norm();
            if (sep < kDegenerate) continue;
            out.push_back(PairSample{std::move(x), std::move(y), sep});
        } else {
            const double scale = scales[local_index % scales.size()];
            Vector x = draw_point(domain, bbox, rng);
            Vector dir = rng.unit_direction(x.size());
            double step = scale * diam;
            Vector y = x + step * dir;
            int halvings = 0;
            while (!domain.contains(y) && halvings < 80) {
                step *= 0.5;
                y = x + step * dir;
                ++halvings;
            }
            if (!domain.contains(y) || (x - y).norm() < kDegenerate) continue;
            ++local_index;
            out.push_back(PairSample{std::move(x), std::move(y), scale * diam});
        }
    }
    return out;
}

}  // namespace coco

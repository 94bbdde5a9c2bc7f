#include "coco/demo.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "coco/rng.hpp"

namespace coco {

namespace {

// Deterministic pairs aimed at the x = 0 curvature blowup; all inside
// (-alpha, alpha).
std::vector<PairSample> probe_pairs(double alpha) {
    std::vector<PairSample> probes;
    Vector zero(1), p(1), m(1);
    zero[0] = 0.0;
    for (double s : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8}) {
        if (s >= 0.5 * alpha) continue;
        p[0] = s;
        probes.push_back(PairSample{zero, p, s});
        m[0] = -s;
        probes.push_back(PairSample{m, p, 2.0 * s});
    }
    return probes;
}

void fold_pair(const VectorOperator& t, const PairSample& pair, ModulusReport& report) {
    const Vector tx = t(pair.x);
    const Vector ty = t(pair.y);
    const Vector dt = tx - ty;
    const Vector dx = pair.x - pair.y;
    const double dt_norm = dt.norm();
    if (dt_norm < 1e-12 * (1.0 + tx.norm())) {
        ++report.pairs_skipped;
        return;
    }
    ++report.pairs_used;
    const double lip = dt_norm / dx.norm();
    if (!report.lip_witness || lip > report.lipschitz_sup) {
        report.lipschitz_sup = lip;
        report.lip_witness = pair;
    }
    const double coco = dt.dot(dx) / dt.dot(dt);
    if (!report.coco_witness || coco < report.coco_inf) {
        report.coco_inf = coco;
        report.coco_witness = pair;
    }
}

}  // namespace

std::vector<double> default_alpha_grid() {
    return {1e-3, 0.25, 0.5, 1.0, 2.0, 3.0, 3.5};
}

std::vector<Example31DemoRow> demo_example31(const std::vector<double>& alpha_grid,
                                             std::uint64_t seed, int count) {
    std::vector<Example31DemoRow> rows;
    rows.reserve(alpha_grid.size());
    const ScalarFunction f = example31_function();

    for (double alpha : alpha_grid) {
        if (!(alpha > 0.0 && alpha < 4.0))
            throw std::invalid_argument("demo_example31: alpha must lie in (0,4)");
        Example31DemoRow row;
        row.alpha = alpha;
        row.claimed_modulus = 1.0 / example31_gradient(alpha);

        ScalarFunction fa = f;
        fa.domain = OpenConvexDomain::interval(-alpha, alpha);
        const VectorOperator grad = gradient_operator(fa);
        ModulusReport report = estimate_moduli(grad, fa.domain, derive_seed(seed, 51), count);
        for (const PairSample& probe : probe_pairs(alpha)) fold_pair(grad, probe, report);

        row.lipschitz_sup = report.lipschitz_sup;
        row.coco_inf = report.has_coco() ? report.coco_inf : std::numeric_limits<double>::infinity();
        if (report.coco_witness) row.worst_pair = *report.coco_witness;
        row.claim_consistent = row.coco_inf >= row.claimed_modulus * (1.0 - kViolationTol);
        row.claim_reciprocal_consistent =
            row.coco_inf >= (1.0 / row.claimed_modulus) * (1.0 - kViolationTol);

        if (alpha > 0.5) {
            row.gridmax_applicable = true;
            row.grid_max_f2 = grid_max_second_derivative(
                [](double x) { return example31_second_derivative(x); }, 0.5, alpha);
            ScalarFunction fr = f;
            fr.domain = OpenConvexDomain::interval(0.5, alpha);
            const ModulusReport right =
                estimate_moduli(gradient_operator(fr), fr.domain, derive_seed(seed, 52), count);
            row.gridmax_consistent =
                right.has_coco() && right.coco_inf >= (1.0 / row.grid_max_f2) * (1.0 - kViolationTol);
        } else {
            row.grid_max_f2 = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_demo_csv(std::ostream& os, const std::vector<Example31DemoRow>& rows) {
    char buf[64];
    auto fmt = [&buf](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    os << "alpha,grid_max_f2,lipschitz_sup,coco_inf,claimed_modulus,"
          "verdict_claim,verdict_claim_reciprocal,verdict_gridmax,"
          "witness_x,witness_y\n";
    for (const auto& r : rows) {
        os << fmt(r.alpha) << "," << fmt(r.grid_max_f2) << "," << fmt(r.lipschitz_sup) << ","
           << fmt(r.coco_inf) << "," << fmt(r.claimed_modulus) << ","
           << (r.claim_consistent ? "consistent" : "falsified") << ","
           << (r.claim_reciprocal_consistent ? "consistent" : "falsified") << ","
           << (r.gridmax_applicable ? (r.gridmax_consistent ? "consistent" : "falsified") : "na")
           << "," << fmt(r.worst_pair.x.size() ? r.worst_pair.x[0] : 0.0) << ","
           << fmt(r.worst_pair.y.size() ? r.worst_pair.y[0] : 0.0) << "\n";
    }
}

BHReport demo_rotation(std::uint64_t seed, int count) {
    const auto domain = OpenConvexDomain::box(Vector::Constant(2, -1.0), Vector::Constant(2, 1.0));
    ScalarFunction wrapper;
    wrapper.domain = domain;
    wrapper.label = "rotation_as_gradient";
    wrapper.value = [](const Vector&) { return 0.0; };
    wrapper.gradient = [](const Vector& x) { return rotation(x); };
    return bh_check(wrapper, domain, 1.0, seed, count);
}

}  // namespace coco

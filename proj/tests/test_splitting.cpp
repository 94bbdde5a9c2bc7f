#include <doctest.h>

#include <cmath>
#include <sstream>

#include "coco/splitting.hpp"

using namespace coco;

namespace {

Vector vec2(double a, double b) {
    Vector v(2);
    v << a, b;
    return v;
}

OpenConvexDomain huge_box(Eigen::Index n) {
    return OpenConvexDomain::box(Vector::Constant(n, -1e30), Vector::Constant(n, 1e30));
}

// minimize (1/2)<x, diag(1,4) x> - <(2,-1), x> over the box [0,1]^2;
// the KKT solution clamps b_i / q_ii componentwise: (1, 0)
InclusionProblem box_problem() {
    Matrix q(2, 2);
    q << 1.0, 0.0, 0.0, 4.0;
    const Vector b = vec2(2.0, -1.0);
    return InclusionProblem{ProxFriendly::box_indicator(vec2(0.0, 0.0), vec2(1.0, 1.0)),
                            quadratic_gradient_operator(q, b, huge_box(2)),
                            0.25,  // 1/lambda_max
                            huge_box(2), vec2(0.5, 0.5)};
}

InclusionProblem free_identity_problem() {
    return InclusionProblem{ProxFriendly::box_indicator(Vector::Constant(2, -1e29), Vector::Constant(2, 1e29)),
                            quadratic_gradient_operator(Matrix::Identity(2, 2), Vector::Zero(2), huge_box(2)),
                            1.0, huge_box(2), vec2(1.0, 0.0)};
}

}  // namespace

TEST_CASE("fb_residual: zero exactly at solutions") {
    // phi = box [0,1]^2, B = grad of (1/2)|x|^2 - <(2,-1), x>
    InclusionProblem p{ProxFriendly::box_indicator(vec2(0.0, 0.0), vec2(1.0, 1.0)),
                       quadratic_gradient_operator(Matrix::Identity(2, 2), vec2(2.0, -1.0), huge_box(2)),
                       1.0, huge_box(2), vec2(0.5, 0.5)};
    CHECK(fb_residual(p, 1.0, vec2(1.0, 0.0)) == 0.0);

    const InclusionProblem free_id = free_identity_problem();
    CHECK(fb_residual(free_id, 1.0, vec2(0.0, 0.0)) == 0.0);
    CHECK(fb_residual(free_id, 1.0, vec2(1.0, 0.0)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(fb_residual(free_id, 0.0, vec2(0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("forward_backward: box-constrained quadratic reaches the KKT point") {
    const InclusionProblem p = box_problem();
    for (double mu : {0.05, 0.125, 0.225}) {
        const SolveTrace trace = forward_backward(p, mu, 1e-10, 100000);
        CHECK(trace.converged);
        CHECK(!trace.diverged);
        const Vector terminal = trace.iterates.back();
        CHECK((terminal - vec2(1.0, 0.0)).norm() <= 1e-8);
        CHECK(trace.final_residual <= 1e-10);
    }
}

TEST_CASE("forward_backward: lasso with identity quadratic converges in one step") {
    // phi = l1(0.75), B = x - a: the first iterate is already the
    // soft-threshold of a
    const Vector a = vec2(2.0, 0.5);
    InclusionProblem p{ProxFriendly::l1(0.75),
                       quadratic_gradient_operator(Matrix::Identity(2, 2), a, huge_box(2)), 1.0,
                       huge_box(2), vec2(-3.0, 7.0)};
    const SolveTrace trace = forward_backward(p, 1.0, 1e-12, 100);
    CHECK(trace.converged);
    const Vector expect = vec2(1.25, 0.0);  // soft-threshold(a, 0.75)
    CHECK((trace.iterates.back() - expect).norm() <= 1e-12);
    CHECK(trace.iterates.size() <= 3);
}

TEST_CASE("forward_backward: admissible step contracts, residuals non-increasing") {
    Matrix q(2, 2);
    q << 1.0, 0.0, 0.0, 4.0;
    InclusionProblem p{ProxFriendly::box_indicator(Vector::Constant(2, -1e29), Vector::Constant(2, 1e29)),
                       quadratic_gradient_operator(q, Vector::Zero(2), huge_box(2)), 0.25,
                       huge_box(2), vec2(0.9, 0.7)};
    const SolveTrace trace = forward_backward(p, 0.49, 1e-10, 100000);
    CHECK(trace.converged);
    CHECK((trace.iterates.back() - vec2(0.0, 0.0)).norm() <= 1e-8);
    for (std::size_t k = 1; k + 1 < trace.residuals.size(); ++k)
        CHECK(trace.residuals[k + 1] <= trace.residuals[k] + 1e-12);
}

TEST_CASE("forward_backward: inadmissible step on the diagonal problem diverges") {
    InclusionProblem p = box_problem();
    p.phi = ProxFriendly::box_indicator(Vector::Constant(2, -1e29), Vector::Constant(2, 1e29));
    p.x0 = vec2(0.3, 0.7);
    const SolveTrace trace = forward_backward(p, 0.6, 1e-10, 100000);  // 0.6 > 2*beta = 0.5
    CHECK(trace.diverged);
    CHECK(!trace.converged);
    CHECK(trace.residuals.back() > 1e6);
}

TEST_CASE("fejer residual monotonicity on the catalog problems") {
    const InclusionProblem p = box_problem();
    for (double mu : {0.05, 0.125, 0.225, 0.49}) {
        const SolveTrace trace = forward_backward(p, mu, 1e-10, 100000);
        for (std::size_t k = 1; k + 1 < trace.residuals.size(); ++k)
            CHECK(trace.residuals[k + 1] <= trace.residuals[k] + 1e-12);
    }
}

TEST_CASE("equilibrium consistency under fresh recomputation") {
    const InclusionProblem p = box_problem();
    const SolveTrace trace = forward_backward(p, 0.125, 1e-10, 100000);
    REQUIRE(trace.converged);
    CHECK(fb_residual(p, 0.125, trace.iterates.back()) <= 1e-10);
}

TEST_CASE("dyn_integrate: euler at dt=1 equals the fixed-point trace exactly") {
    const InclusionProblem p = box_problem();
    for (double mu : {0.125, 0.225}) {
        const SolveTrace fp = forward_backward(p, mu, 1e-10, 2000);
        const SolveTrace euler = dyn_integrate(p, mu, 1.0, 2000.0, 1e-10, SolveMode::euler);
        REQUIRE(fp.iterates.size() == euler.iterates.size());
        for (std::size_t k = 0; k < fp.iterates.size(); ++k) {
            CHECK(fp.iterates[k] == euler.iterates[k]);
            CHECK(fp.residuals[k] == euler.residuals[k]);
        }
    }
}

TEST_CASE("dyn_integrate: explicit decay of the free identity field") {
    // phi = 0 (huge box), B = Id, mu = 1: the field is -x, Euler with
    // dt = 0.5 halves the state every step
    const InclusionProblem p = free_identity_problem();
    const SolveTrace trace = dyn_integrate(p, 1.0, 0.5, 5.0, 1e-30, SolveMode::euler);
    REQUIRE(trace.iterates.size() >= 4);
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(trace.iterates[k][0] == doctest::Approx(std::pow(0.5, double(k))).epsilon(1e-15));
}

TEST_CASE("dyn_integrate: rk4 lands on the fixed point") {
    const InclusionProblem p = box_problem();
    const SolveTrace fp = forward_backward(p, 0.125, 1e-10, 100000);
    const SolveTrace rk = dyn_integrate(p, 0.125, 0.1, 200.0, 1e-10, SolveMode::rk4);
    CHECK((rk.iterates.back() - fp.iterates.back()).norm() <= 1e-6);

    CHECK_THROWS_AS(dyn_integrate(p, 0.125, 1.5, 10.0, 1e-10, SolveMode::rk4), std::invalid_argument);
    CHECK_THROWS_AS(dyn_integrate(p, 0.125, 0.1, 10.0, 1e-10, SolveMode::fixed_point),
                    std::invalid_argument);
}

TEST_CASE("admissibility against claimed and certified moduli") {
    InclusionProblem p = box_problem();  // claimed beta = 0.25
    CHECK(admissibility(p, 0.49).admissible);
    CHECK(!admissibility(p, 0.5).admissible);  // boundary of the open interval
    CHECK(!admissibility(p, 0.0).admissible);
    CHECK(!admissibility(p, 0.6).admissible);
    CHECK(!admissibility(p, 0.49).beta_estimated);

    // no claim: certify by sampling on a bounded window
    p.beta.reset();
    p.domain = OpenConvexDomain::box(Vector::Constant(2, -1.0), Vector::Constant(2, 1.0));
    p.b_op = quadratic_gradient_operator((Matrix(2, 2) << 1.0, 0.0, 0.0, 4.0).finished(),
                                         vec2(0.0, 0.0), p.domain);
    const AdmissibilityReport rep = admissibility(p, 0.4, 42, 10000);
    CHECK(rep.beta_estimated);
    CHECK(rep.beta == doctest::Approx(0.25).epsilon(0.02));
    CHECK(rep.admissible);
}

TEST_CASE("trace csv: header, blank t column for fixed point, 17 digits") {
    const InclusionProblem p = free_identity_problem();
    const SolveTrace trace = forward_backward(p, 0.75, 1e-6, 50);
    std::ostringstream os;
    write_trace_csv(os, trace);
    const std::string text = os.str();
    CHECK(text.rfind("iter,t,x_0,x_1,residual\n", 0) == 0);
    CHECK(text.find("\n0,,") != std::string::npos);  // t blank in fixed-point mode

    const SolveTrace euler = dyn_integrate(p, 0.75, 0.5, 5.0, 1e-6, SolveMode::euler);
    std::ostringstream os2;
    write_trace_csv(os2, euler);
    CHECK(os2.str().find("\n1,0.5,") != std::string::npos);

    // 1/3 at 17 significant digits
    SolveTrace t3;
    t3.mode = SolveMode::fixed_point;
    Vector third(1);
    third[0] = 1.0 / 3.0;
    t3.iterates.push_back(third);
    t3.residuals.push_back(0.0);
    std::ostringstream os3;
    write_trace_csv(os3, t3);
    CHECK(os3.str().find("0.33333333333333331") != std::string::npos);
}

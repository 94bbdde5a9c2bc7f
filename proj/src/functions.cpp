#include "coco/functions.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "coco/jacobi.hpp"

namespace coco {

double ScalarFunction::operator()(const Vector& x) const {
    if (!domain.contains(x)) throw std::domain_error(label + ": evaluation outside the open domain");
    const double v = value(x);
    if (!std::isfinite(v)) throw std::runtime_error(label + ": non-finite value");
    return v;
}

Vector ScalarFunction::eval_gradient(const Vector& x) const {
    if (!has_gradient()) throw std::logic_error(label + ": no analytic gradient");
    if (!domain.contains(x)) throw std::domain_error(label + ": gradient outside the open domain");
    Vector g = gradient(x);
    if (!is_finite(g)) throw std::runtime_error(label + ": non-finite gradient");
    return g;
}

Matrix ScalarFunction::eval_hessian(const Vector& x) const {
    if (!has_hessian()) throw std::logic_error(label + ": no analytic hessian");
    if (!domain.contains(x)) throw std::domain_error(label + ": hessian outside the open domain");
    Matrix h = hessian(x);
    if (!h.allFinite()) throw std::runtime_error(label + ": non-finite hessian");
    return h;
}

Vector VectorOperator::operator()(const Vector& x) const {
    if (!domain.contains(x)) throw std::domain_error(label + ": evaluation outside the open domain");
    Vector out = apply(x);
    if (out.size() != x.size()) throw std::runtime_error(label + ": output dimension mismatch");
    if (!is_finite(out)) throw std::runtime_error(label + ": non-finite output");
    return out;
}

// ---------------------------------------------------------------------------

namespace {

void require_example31_domain(double x) {
    if (!(x > -4.0 && x < 4.0)) throw std::domain_error("example31: argument outside (-4,4)");
}

}  // namespace

double example31_value(double x) {
    require_example31_domain(x);
    if (x >= 0.0) return 0.125 * std::pow(x, 1.5) + 4.0 / (4.0 - x);
    return 4.0 / (4.0 - x);
}

double example31_gradient(double x) {
    require_example31_domain(x);
    const double rational = 4.0 / ((4.0 - x) * (4.0 - x));
    if (x >= 0.0) return (3.0 / 16.0) * std::sqrt(x) + rational;
    return rational;
}

double example31_second_derivative(double x) {
    require_example31_domain(x);
    const double d = 4.0 - x;
    const double rational = 8.0 / (d * d * d);
    if (x > 0.0) return (3.0 / 32.0) / std::sqrt(x) + rational;
    return rational;
}

ScalarFunction example31_function() {
    ScalarFunction f;
    f.domain = OpenConvexDomain::interval(-4.0, 4.0);
    f.label = "example31";
    f.value = [](const Vector& x) { return example31_value(x[0]); };
    f.gradient = [](const Vector& x) {
        Vector g(1);
        g[0] = example31_gradient(x[0]);
        return g;
    };
    f.hessian = [](const Vector& x) {
        Matrix h(1, 1);
        h(0, 0) = example31_second_derivative(x[0]);
        return h;
    };
    return f;
}

Vector rotation(const Vector& x) {
    if (x.size() != 2) throw std::invalid_argument("rotation: defined on R^2 only");
    Vector out(2);
    out[0] = -x[1];
    out[1] = x[0];
    return out;
}

VectorOperator rotation_operator(OpenConvexDomain domain) {
    if (domain.dimension() != 2) throw std::invalid_argument("rotation_operator: domain must be 2-d");
    VectorOperator t;
    t.domain = std::move(domain);
    t.label = "rotation";
    t.apply = [](const Vector& x) { return rotation(x); };
    return t;
}

void require_symmetric_psd(const Matrix& q) {
    if (q.rows() != q.cols()) throw std::invalid_argument("quadratic: Q must be square");
    if (q != q.transpose().eval()) throw std::invalid_argument("quadratic: Q must be exactly symmetric");
    const SpectralBounds b = spectral_bounds(q);
    if (b.lambda_min < -1e-12 * (1.0 + q.norm()))
        throw std::invalid_argument("quadratic: Q must be positive semidefinite");
}

Vector quadratic_gradient(const Matrix& q, const Vector& b, const Vector& x) {
    if (q.rows() != x.size() || b.size() != x.size())
        throw std::invalid_argument("quadratic_gradient: dimension mismatch");
    return q * x - b;
}

ScalarFunction quadratic_function(Matrix q, Vector b, OpenConvexDomain domain, std::string label) {
    require_symmetric_psd(q);
    if (q.rows() != domain.dimension() || b.size() != domain.dimension())
        throw std::invalid_argument("quadratic_function: dimension mismatch");
    ScalarFunction f;
    f.domain = std::move(domain);
    f.label = std::move(label);
    f.value = [q, b](const Vector& x) { return 0.5 * x.dot(q * x) - b.dot(x); };
    f.gradient = [q, b](const Vector& x) { return Vector(q * x - b); };
    f.hessian = [q](const Vector&) { return q; };
    f.constant_hessian = q;
    return f;
}

VectorOperator quadratic_gradient_operator(Matrix q, Vector b, OpenConvexDomain domain, std::string label) {
    require_symmetric_psd(q);
    if (q.rows() != domain.dimension() || b.size() != domain.dimension())
        throw std::invalid_argument("quadratic_gradient_operator: dimension mismatch");
    VectorOperator t;
    t.domain = std::move(domain);
    t.label = std::move(label);
    t.apply = [q, b](const Vector& x) { return Vector(q * x - b); };
    return t;
}

// ---------------------------------------------------------------------------

ProxFriendly ProxFriendly::l1(double weight) {
    if (!(weight >= 0.0)) throw std::invalid_argument("l1: weight must be >= 0");
    return ProxFriendly(L1Prox{weight}, "l1");
}

ProxFriendly ProxFriendly::box_indicator(Vector lower, Vector upper) {
    if (lower.size() != upper.size() || lower.size() == 0)
        throw std::invalid_argument("box_indicator: bad bounds");
    if (!(lower.array() <= upper.array()).all())
        throw std::invalid_argument("box_indicator: requires lower <= upper");
    return ProxFriendly(BoxProx{std::move(lower), std::move(upper)}, "box");
}

ProxFriendly ProxFriendly::ball_indicator(Vector center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball_indicator: radius must be > 0");
    return ProxFriendly(BallProx{std::move(center), radius}, "ball");
}

ProxFriendly ProxFriendly::quadratic(Matrix q, Vector b) {
    require_symmetric_psd(q);
    if (q.rows() != b.size()) throw std::invalid_argument("quadratic prox: dimension mismatch");
    return ProxFriendly(QuadraticProx{std::move(q), std::move(b)}, "quadratic");
}

namespace {

double soft_threshold(double v, double t) {
    if (v > t) return v - t;
    if (v < -t) return v + t;
    return 0.0;
}

}  // namespace

Vector ProxFriendly::prox(double mu, const Vector& x) const {
    if (!(mu > 0.0)) throw std::invalid_argument("prox: mu must be > 0");
    if (const auto* l1 = std::get_if<L1Prox>(&kind_)) {
        Vector out(x.size());
        const double t = mu * l1->weight;
        for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = soft_threshold(x[i], t);
        return out;
    }
    if (const auto* bx = std::get_if<BoxProx>(&kind_)) {
        if (x.size() != bx->lower.size()) throw std::invalid_argument("prox: dimension mismatch");
        return x.cwiseMax(bx->lower).cwiseMin(bx->upper);
    }
    if (const auto* bl = std::get_if<BallProx>(&kind_)) {
        if (x.size() != bl->center.size()) throw std::invalid_argument("prox: dimension mismatch");
        Vector d = x - bl->center;
        const double n = d.norm();
        if (n <= bl->radius) return x;
        return bl->center + d * (bl->radius / n);
    }
    const auto& qd = std::get<QuadraticProx>(kind_);
    if (x.size() != qd.b.size()) throw std::invalid_argument("prox: dimension mismatch");
    const Matrix lhs = Matrix::Identity(x.size(), x.size()) + mu * qd.q;
    return lhs.ldlt().solve((x + mu * qd.b).eval());
}

VectorOperator prox_operator(const ProxFriendly& phi, double mu, OpenConvexDomain domain) {
    VectorOperator t;
    t.domain = std::move(domain);
    t.label = "prox_" + phi.label();
    t.apply = [phi, mu](const Vector& x) { return phi.prox(mu, x); };
    return t;
}

MonotoneLinear MonotoneLinear::make(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("MonotoneLinear: matrix must be square");
    const Matrix sym = 0.5 * (m + m.transpose());
    const SpectralBounds b = spectral_bounds(sym);
    if (b.lambda_min < -1e-12 * (1.0 + m.norm()))
        throw std::invalid_argument("MonotoneLinear: (M+M^T)/2 must be positive semidefinite");
    return MonotoneLinear{std::move(m)};
}

Vector resolvent(const MaximalMonotone& a, double lambda, const Vector& x) {
    if (!(lambda > 0.0)) throw std::invalid_argument("resolvent: lambda must be > 0");
    if (const auto* phi = std::get_if<ProxFriendly>(&a)) return phi->prox(lambda, x);
    const auto& lin = std::get<MonotoneLinear>(a);
    if (lin.m.rows() != x.size()) throw std::invalid_argument("resolvent: dimension mismatch");
    const Matrix lhs = Matrix::Identity(x.size(), x.size()) + lambda * lin.m;
    return lhs.partialPivLu().solve(x);
}

Vector yosida(const MaximalMonotone& a, double lambda, const Vector& x) {
    return (x - resolvent(a, lambda, x)) / lambda;
}

VectorOperator one_minus(const VectorOperator& t) {
    VectorOperator out;
    out.domain = t.domain;
    out.label = "id_minus_" + t.label;
    out.apply = [t](const Vector& x) { return Vector(x - t(x)); };
    return out;
}

VectorOperator two_t_minus_id(const VectorOperator& t) {
    VectorOperator out;
    out.domain = t.domain;
    out.label = "reflect_" + t.label;
    out.apply = [t](const Vector& x) { return Vector(2.0 * t(x) - x); };
    return out;
}

std::pair<ScalarFunction, ScalarFunction> bh_companions(const ScalarFunction& f, double beta) {
    if (!(beta > 0.0)) throw std::invalid_argument("bh_companions: beta must be > 0");
    ScalarFunction g, h;
    g.domain = f.domain;
    h.domain = f.domain;
    g.label = f.label + "_companion_g";
    h.label = f.label + "_companion_h";
    g.value = [f, beta](const Vector& x) { return 0.5 * x.squaredNorm() - f(x) / beta; };
    h.value = [f, beta](const Vector& x) { return (2.0 / beta) * f(x) - 0.5 * x.squaredNorm(); };
    if (f.has_gradient()) {
        g.gradient = [f, beta](const Vector& x) { return Vector(x - f.eval_gradient(x) / beta); };
        h.gradient = [f, beta](const Vector& x) { return Vector((2.0 / beta) * f.eval_gradient(x) - x); };
    }
    if (f.has_hessian()) {
        g.hessian = [f, beta](const Vector& x) {
            return Matrix(Matrix::Identity(x.size(), x.size()) - f.eval_hessian(x) / beta);
        };
        h.hessian = [f, beta](const Vector& x) {
            return Matrix((2.0 / beta) * f.eval_hessian(x) - Matrix::Identity(x.size(), x.size()));
        };
    }
    if (f.constant_hessian) {
        const Eigen::Index n = f.constant_hessian->rows();
        g.constant_hessian = Matrix(Matrix::Identity(n, n) - *f.constant_hessian / beta);
        h.constant_hessian = Matrix((2.0 / beta) * *f.constant_hessian - Matrix::Identity(n, n));
    }
    return {std::move(g), std::move(h)};
}

}  // namespace coco

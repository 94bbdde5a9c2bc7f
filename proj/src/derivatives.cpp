#include "coco/derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coco {

namespace {

double checked_eval(const ScalarFunction& f, const Vector& x) {
    return f(x);  // membership and finiteness enforced by the call operator
}

double default_step(const ScalarFunction& f, const Vector& x, double base) {
    const double sr = f.domain.safe_radius(x);  // throws when x is outside
    return std::min(base * (1.0 + x.norm()), 0.25 * sr);
}

}  // namespace

Vector fd_gradient(const ScalarFunction& f, const Vector& x) {
    return fd_gradient(f, x, default_step(f, x, 1e-6));
}

Vector fd_gradient(const ScalarFunction& f, const Vector& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: step must be > 0");
    const Eigen::Index n = x.size();
    Vector g(n);
    Vector p = x;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double xi = x[i];
        p[i] = xi + h;
        const double fp = checked_eval(f, p);
        p[i] = xi - h;
        const double fm = checked_eval(f, p);
        p[i] = xi;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

Matrix fd_hessian(const ScalarFunction& f, const Vector& x) {
    return fd_hessian(f, x, default_step(f, x, 1e-4));
}

Matrix fd_hessian(const ScalarFunction& f, const Vector& x, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_hessian: step must be > 0");
    const Eigen::Index n = x.size();
    Matrix m(n, n);
    Vector p = x;
    const double fc = checked_eval(f, x);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double xi = x[i];
        p[i] = xi + h;
        const double fp = checked_eval(f, p);
        p[i] = xi - h;
        const double fm = checked_eval(f, p);
        p[i] = xi;
        m(i, i) = (fp - 2.0 * fc + fm) / (h * h);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double xj = x[j];
            p[i] = xi + h;
            p[j] = xj + h;
            const double fpp = checked_eval(f, p);
            p[j] = xj - h;
            const double fpm = checked_eval(f, p);
            p[i] = xi - h;
            p[j] = xj + h;
            const double fmp = checked_eval(f, p);
            p[j] = xj - h;
            const double fmm = checked_eval(f, p);
            p[i] = xi;
            p[j] = xj;
            const double v = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
            m(i, j) = v;
            m(j, i) = v;
        }
    }
    return 0.5 * (m + m.transpose().eval());
}

Vector gradient_of(const ScalarFunction& f, const Vector& x) {
    if (f.has_gradient()) return f.eval_gradient(x);
    return fd_gradient(f, x);
}

VectorOperator gradient_operator(const ScalarFunction& f) {
    VectorOperator t;
    t.domain = f.domain;
    t.label = "grad_" + f.label;
    t.apply = [f](const Vector& x) { return gradient_of(f, x); };
    return t;
}

}  // namespace coco

#include "coco/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace coco {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
    double s = 0.0;
    for (Eigen::Index p = 0; p < a.rows(); ++p)
        for (Eigen::Index q = p + 1; q < a.cols(); ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
}

}  // namespace

EigenSystem jacobi_eigensystem(const Eigen::MatrixXd& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument("jacobi_eigensystem: matrix must be square, n >= 1");
    if (m != m.transpose().eval())
        throw std::invalid_argument("jacobi_eigensystem: matrix must be exactly symmetric");

    const Eigen::Index n = m.rows();
    Eigen::MatrixXd a = m;
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
    const double threshold = 1e-12 * m.norm();

    bool converged = off_diagonal_norm(a) <= threshold;
    for (int sweep = 0; sweep < 50 && !converged; ++sweep) {
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                // smaller root of t^2 + 2t*theta - 1 = 0, for a stable rotation
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = a(p, p);
                const double aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (Eigen::Index r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        const double arp = a(r, p);
                        const double arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    const double vrp = v(r, p);
                    const double vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
        converged = off_diagonal_norm(a) <= threshold;
    }
    if (!converged)
        throw std::runtime_error("jacobi_eigensystem: no convergence after 50 sweeps");

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

    EigenSystem sys;
    sys.values.resize(n);
    sys.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        sys.values[k] = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
        sys.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
    }
    return sys;
}

SpectralBounds spectral_bounds(const Eigen::MatrixXd& m) {
    const EigenSystem sys = jacobi_eigensystem(m);
    return SpectralBounds{sys.values[0], sys.values[sys.values.size() - 1]};
}

double spectral_norm(const Eigen::MatrixXd& m) {
    const SpectralBounds b = spectral_bounds(m);
    return std::max(std::abs(b.lambda_min), std::abs(b.lambda_max));
}

}  // namespace coco

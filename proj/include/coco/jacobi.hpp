#pragma once

#include <Eigen/Core>

namespace coco {

/// Eigen-decomposition of a symmetric matrix: m = vectors * values.asDiagonal()
/// * vectors.transpose(), eigenvalues ascending.
struct EigenSystem {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
};

/// Cyclic Jacobi rotations on an exactly symmetric matrix, iterated until the
/// off-diagonal Frobenius norm drops below 1e-12 * |m|_F. Throws after 50
/// sweeps without convergence (pathological input) and on asymmetric input.
EigenSystem jacobi_eigensystem(const Eigen::MatrixXd& m);

struct SpectralBounds {
    double lambda_min;
    double lambda_max;
};

/// Extreme eigenvalues of a symmetric matrix.
SpectralBounds spectral_bounds(const Eigen::MatrixXd& m);

/// Spectral norm max(|lambda_min|, |lambda_max|) of a symmetric matrix.
double spectral_norm(const Eigen::MatrixXd& m);

}  // namespace coco

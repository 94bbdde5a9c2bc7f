#include <doctest.h>

#include <cmath>

#include "coco/jacobi.hpp"
#include "coco/rng.hpp"

using namespace coco;
using Eigen::MatrixXd;

namespace {

// n=2 oracle: eigenvalues from the characteristic polynomial
// lambda^2 - tr*lambda + det = 0.
std::pair<double, double> charpoly_roots_2x2(const MatrixXd& m) {
    const double tr = m(0, 0) + m(1, 1);
    const double det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    return {tr / 2.0 - disc, tr / 2.0 + disc};
}

MatrixXd random_symmetric(Rng& rng, int n) {
    MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.uniform(-2.0, 2.0);
    return 0.5 * (a + a.transpose()).eval();
}

}  // namespace

TEST_CASE("spectral_bounds on fixed matrices") {
    MatrixXd d(2, 2);
    d << 2.0, 0.0, 0.0, 3.0;
    auto b = spectral_bounds(d);
    CHECK(b.lambda_min == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(b.lambda_max == doctest::Approx(3.0).epsilon(1e-14));

    MatrixXd swap(2, 2);
    swap << 0.0, 1.0, 1.0, 0.0;  // characteristic polynomial lambda^2 - 1
    b = spectral_bounds(swap);
    CHECK(b.lambda_min == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(b.lambda_max == doctest::Approx(1.0).epsilon(1e-13));

    b = spectral_bounds(MatrixXd::Identity(3, 3));
    CHECK(b.lambda_min == doctest::Approx(1.0));
    CHECK(b.lambda_max == doctest::Approx(1.0));

    CHECK(spectral_norm(swap) == doctest::Approx(1.0));
}

TEST_CASE("jacobi rejects asymmetric input") {
    MatrixXd a(2, 2);
    a << 1.0, 2.0, 0.0, 1.0;
    CHECK_THROWS_AS(jacobi_eigensystem(a), std::invalid_argument);
}

TEST_CASE("jacobi agrees with the characteristic polynomial at n=2") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const MatrixXd m = random_symmetric(rng, 2);
        const auto sys = jacobi_eigensystem(m);
        const auto [lo, hi] = charpoly_roots_2x2(m);
        const double scale = 1.0 + m.norm();
        CHECK(std::abs(sys.values[0] - lo) <= 1e-12 * scale);
        CHECK(std::abs(sys.values[1] - hi) <= 1e-12 * scale);
    }
}

TEST_CASE("jacobi reconstruction: V D V^T matches the input entrywise") {
    Rng rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng.uniform(0.0, 8.0));
        const MatrixXd m = random_symmetric(rng, n);
        const auto sys = jacobi_eigensystem(m);
        const MatrixXd rebuilt = sys.vectors * sys.values.asDiagonal() * sys.vectors.transpose();
        const double tol = 1e-10 * std::max(1e-30, m.norm());
        CHECK(((rebuilt - m).cwiseAbs().maxCoeff()) <= tol);
        // orthonormality of the eigenvector basis
        const MatrixXd gram = sys.vectors.transpose() * sys.vectors;
        CHECK((gram - MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
        // ascending order
        for (int k = 1; k < n; ++k) CHECK(sys.values[k - 1] <= sys.values[k]);
    }
}

TEST_CASE("jacobi handles the zero matrix and n=1") {
    const auto z = spectral_bounds(MatrixXd::Zero(4, 4));
    CHECK(z.lambda_min == 0.0);
    CHECK(z.lambda_max == 0.0);
    MatrixXd one(1, 1);
    one << -7.5;
    const auto b = spectral_bounds(one);
    CHECK(b.lambda_min == -7.5);
    CHECK(b.lambda_max == -7.5);
}

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace coco {

/// Deterministic random stream. All sampling in the library goes through
/// this wrapper: the raw mt19937_64 sequence is standardized, the
/// distribution adaptors in <random> are not, so we convert to doubles by
/// hand to keep samples byte-identical across platforms and compilers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform draw from the open interval (0,1).
    double uniform01() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (pairs cached).
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    Eigen::VectorXd gaussian_vector(Eigen::Index n) {
        Eigen::VectorXd v(n);
        for (Eigen::Index i = 0; i < n; ++i) v[i] = gaussian();
        return v;
    }

    /// Uniform direction on the unit sphere.
    Eigen::VectorXd unit_direction(Eigen::Index n) {
        for (;;) {
            Eigen::VectorXd v = gaussian_vector(n);
            const double norm = v.norm();
            if (norm > 1e-12) return v / norm;
        }
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Fixed-offset sub-stream derivation, used wherever a routine needs
/// several independent deterministic streams from one caller seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t offset) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (offset + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace coco

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "coco/certifier.hpp"

namespace coco {

/// One row of the interval sweep for the 1-d catalog function on
/// (-alpha, alpha): sampled moduli of f', the claimed cocoercivity
/// modulus 1/f'(alpha) in both orientations, and the curvature-grid
/// alternative modulus on (0.5, alpha) when that interval exists.
struct Example31DemoRow {
    double alpha = 0.0;
    double grid_max_f2 = 0.0;      // max |f''| over [0.5, alpha]; NaN when alpha <= 0.5
    double lipschitz_sup = 0.0;    // of f' on (-alpha, alpha), probe pairs included
    double coco_inf = 0.0;         // of f' on (-alpha, alpha), probe pairs included
    double claimed_modulus = 0.0;  // 1/f'(alpha)
    bool claim_consistent = false;             // coco_inf >= claimed_modulus
    bool claim_reciprocal_consistent = false;  // coco_inf >= 1/claimed_modulus
    bool gridmax_applicable = false;
    bool gridmax_consistent = false;  // on (0.5, alpha) with modulus 1/grid_max_f2
    PairSample worst_pair;            // argmin cocoercivity ratio
};

/// Sweep of the cocoercivity claim over alpha values in (0,4). The sampled
/// pair set is augmented with deterministic probe pairs straddling the
/// curvature blowup at 0, so falsifying witnesses near 0 do not depend on
/// sampling luck.
std::vector<Example31DemoRow> demo_example31(const std::vector<double>& alpha_grid,
                                             std::uint64_t seed, int count);

std::vector<double> default_alpha_grid();

void write_demo_csv(std::ostream& os, const std::vector<Example31DemoRow>& rows);

/// The rotation field wrapped as if it were a gradient: bh_check then
/// reports the Lipschitz statement consistent at beta = 1, cocoercivity
/// falsified with a zero-inner-product witness, and consistency = false,
/// showing the gradient hypothesis is not decorative.
BHReport demo_rotation(std::uint64_t seed, int count);

}  // namespace coco

#pragma once

#include "coco/functions.hpp"

namespace coco {

/// Central-difference gradient with the default step
/// h = min(1e-6 * (1 + |x|), safe_radius(x)/4); the stencil never leaves
/// the open domain. Exact for quadratics up to roundoff.
Vector fd_gradient(const ScalarFunction& f, const Vector& x);
Vector fd_gradient(const ScalarFunction& f, const Vector& x, double h);

/// Second-order central stencil, symmetrized as (M + M^T)/2. Default step
/// h = min(1e-4 * (1 + |x|), safe_radius(x)/4).
Matrix fd_hessian(const ScalarFunction& f, const Vector& x);
Matrix fd_hessian(const ScalarFunction& f, const Vector& x, double h);

/// Analytic gradient when f carries one, finite differences otherwise.
Vector gradient_of(const ScalarFunction& f, const Vector& x);

/// gradient_of as a VectorOperator on f's domain.
VectorOperator gradient_operator(const ScalarFunction& f);

}  // namespace coco

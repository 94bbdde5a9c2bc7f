#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "coco/domain.hpp"

namespace coco {

/// Scalar function f: Omega -> R with optional analytic gradient/Hessian.
/// Evaluation through the call operator checks membership and finiteness.
struct ScalarFunction {
    OpenConvexDomain domain;
    std::string label;
    std::function<double(const Vector&)> value;
    std::function<Vector(const Vector&)> gradient;        // empty when unavailable
    std::function<Matrix(const Vector&)> hessian;         // empty when unavailable
    std::optional<Matrix> constant_hessian;               // set for quadratics; lets
                                                          // checks decide by eigenvalues

    double operator()(const Vector& x) const;
    bool has_gradient() const { return static_cast<bool>(gradient); }
    bool has_hessian() const { return static_cast<bool>(hessian); }
    Vector eval_gradient(const Vector& x) const;
    Matrix eval_hessian(const Vector& x) const;
};

/// Operator T: Omega -> R^n. Checked evaluation as above.
struct VectorOperator {
    OpenConvexDomain domain;
    std::string label;
    std::function<Vector(const Vector&)> apply;

    Vector operator()(const Vector& x) const;
};

// ---------------------------------------------------------------------------
// Catalog functions and operators
// ---------------------------------------------------------------------------

/// Piecewise C^1 convex function on (-4,4):
///   f(x) = x^{3/2}/8 + 4/(4-x)  on [0,4)
///   f(x) = 4/(4-x)              on (-4,0)
/// Continuously differentiable, second derivative unbounded at 0+.
double example31_value(double x);
double example31_gradient(double x);
double example31_second_derivative(double x);
ScalarFunction example31_function();

/// Plane rotation (x1,x2) -> (-x2,x1): an isometry with identically zero
/// displacement inner products, monotone but not cocoercive for any modulus.
Vector rotation(const Vector& x);
VectorOperator rotation_operator(OpenConvexDomain domain);

/// Rejects asymmetric (exact comparison) or non-psd Q (via spectral_bounds).
void require_symmetric_psd(const Matrix& q);

/// Gradient Qx - b of the quadratic (1/2)<x,Qx> - <b,x>.
Vector quadratic_gradient(const Matrix& q, const Vector& b, const Vector& x);
ScalarFunction quadratic_function(Matrix q, Vector b, OpenConvexDomain domain, std::string label = "quadratic");
VectorOperator quadratic_gradient_operator(Matrix q, Vector b, OpenConvexDomain domain,
                                           std::string label = "quadratic_gradient");

// ---------------------------------------------------------------------------
// Proximal catalog
// ---------------------------------------------------------------------------

struct L1Prox {
    double weight;  // >= 0
};
struct BoxProx {
    Vector lower, upper;  // indicator of the closed box
};
struct BallProx {
    Vector center;
    double radius;  // indicator of the closed ball
};
struct QuadraticProx {
    Matrix q;  // symmetric psd
    Vector b;
};

/// Closed catalog of functions with closed-form proximal mappings.
class ProxFriendly {
public:
    using Kind = std::variant<L1Prox, BoxProx, BallProx, QuadraticProx>;

    static ProxFriendly l1(double weight);
    static ProxFriendly box_indicator(Vector lower, Vector upper);
    static ProxFriendly ball_indicator(Vector center, double radius);
    static ProxFriendly quadratic(Matrix q, Vector b);

    /// prox_{mu*phi}(x): soft-threshold, projection, or the linear solve
    /// (I + mu Q) y = x + mu b depending on the kind.
    Vector prox(double mu, const Vector& x) const;

    const Kind& kind() const { return kind_; }
    const std::string& label() const { return label_; }

private:
    ProxFriendly(Kind kind, std::string label) : kind_(std::move(kind)), label_(std::move(label)) {}
    Kind kind_;
    std::string label_;
};

/// prox_{mu*phi} as a VectorOperator on the given domain.
VectorOperator prox_operator(const ProxFriendly& phi, double mu, OpenConvexDomain domain);

// ---------------------------------------------------------------------------
// Resolvents and the Yosida approximation
// ---------------------------------------------------------------------------

/// Monotone linear map x -> Mx; monotonicity of (M+M^T)/2 checked at
/// construction, M itself may be non-symmetric (rotations qualify).
struct MonotoneLinear {
    Matrix m;
    static MonotoneLinear make(Matrix m);
};

/// Supported maximal monotone representations: the subdifferential of a
/// ProxFriendly (resolvent = prox) or a monotone linear map (resolvent by
/// direct solve).
using MaximalMonotone = std::variant<ProxFriendly, MonotoneLinear>;

/// J_lambda(x) = (Id + lambda A)^{-1} x.
Vector resolvent(const MaximalMonotone& a, double lambda, const Vector& x);

/// A_lambda(x) = (x - J_lambda(x)) / lambda; lambda-cocoercive.
Vector yosida(const MaximalMonotone& a, double lambda, const Vector& x);

// ---------------------------------------------------------------------------
// Operator transforms and companion functions
// ---------------------------------------------------------------------------

VectorOperator one_minus(const VectorOperator& t);        // x -> x - Tx
VectorOperator two_t_minus_id(const VectorOperator& t);   // x -> 2Tx - x

/// The pair g(x) = |x|^2/2 - f(x)/beta and h(x) = (2/beta) f(x) - |x|^2/2
/// on f's domain, with analytic derivatives composed when f carries them.
std::pair<ScalarFunction, ScalarFunction> bh_companions(const ScalarFunction& f, double beta);

}  // namespace coco

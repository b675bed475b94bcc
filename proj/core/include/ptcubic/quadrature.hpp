#pragma once

// High-precision quadrature wrappers used by the asymptotics module.
// Two schemes:
//   - double_exponential (default): tanh-sinh on finite intervals, exp-sinh
//     on (0, inf); self-refining with an error estimate.
//   - gauss_legendre: runtime-generated Gauss-Legendre rules (nodes chosen
//     by the config) on finite intervals; semi-infinite integrals are
//     mapped through u = y/(1-y).  Error estimated by comparing against
//     the half-order rule.

#include "ptcubic/numeric.hpp"

#include <functional>

namespace ptcubic {

enum class QuadratureScheme { double_exponential, gauss_legendre };

struct QuadratureConfig {
    QuadratureScheme scheme = QuadratureScheme::double_exponential;
    // Gauss-Legendre node count; the double-exponential scheme chooses its
    // own node set adaptively and reports what it used.
    int nodes = 200;
    // Target relative tolerance; non-convergence raises QuadratureError.
    Real rel_tolerance = Real("1e-30");
};

struct QuadratureResult {
    Real value;
    Real estimated_error; // absolute error estimate
    int nodes_used = 0;   // integrand evaluations
};

using Integrand = std::function<Real(const Real&)>;

// Integrate f over the finite interval (a, b); endpoint singularities in
// derivatives are tolerated by the double-exponential scheme.
QuadratureResult integrate_finite(const Integrand& f, const Real& a,
                                  const Real& b, const QuadratureConfig& config);

// Integrate f over (0, inf).  f must decay fast enough to be integrable and
// should underflow gracefully (return exact 0) at extreme arguments.
QuadratureResult integrate_semi_infinite(const Integrand& f,
                                         const QuadratureConfig& config);

// Nodes and weights of the n-point Gauss-Legendre rule on (-1, 1), computed
// at working precision by Newton iteration on the Legendre recurrence.
void gauss_legendre_rule(int n, std::vector<Real>& nodes,
                         std::vector<Real>& weights);

} // namespace ptcubic

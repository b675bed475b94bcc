#pragma once

// Large-order growth analysis of the series coefficients: the leading
// factorial-growth prediction, its rational correction series, Richardson
// acceleration of ratio sequences, the dispersion-relation moment integral,
// the small-coupling discontinuity, the decay width of the inverted (real,
// unstable) Hamiltonian, and the associated bounce action.

#include "ptcubic/numeric.hpp"
#include "ptcubic/perturbation.hpp"
#include "ptcubic/quadrature.hpp"

#include <array>
#include <optional>
#include <vector>

namespace ptcubic {

// Correction coefficients r_1..r_7 of the growth model: the bracket is
//   1 - sum_{d=1..depth} r_d / [(n-1/2)(n-3/2)...(n-(2d-1)/2)].
struct WkbGrowthModel {
    static const std::array<Rat, 7>& correction_coefficients();
    static constexpr int max_depth = 7;
};

// Leading growth prediction (-1)^{n+1} 60^{n+1/2} (2pi)^{-3/2} Gamma(n+1/2),
// with Gamma at half-integers computed exactly as (2n-1)!! sqrt(pi) / 2^n.
// Accurate to at least min(precision, 110) significant digits.
Real leading_growth_prediction(int n, int precision);

// Leading term times the truncated correction bracket (depth terms, exact
// rational bracket).  depth = 0 reproduces leading_growth_prediction.
// Requires 0 <= depth <= 7 and n >= depth + 1 so every denominator factor
// is positive.
Real wkb_growth_prediction(int n, int depth, int precision);

struct GrowthRow {
    int n = 0;
    Int b_n;
    Real leading_prediction;
    Real wkb_prediction;
    Real leading_ratio; // leading_prediction / b_n
    Real wkb_ratio;     // wkb_prediction / b_n
    int wkb_depth = 0;  // effective depth used for this row (min(depth, n-1))
};

struct GrowthReport {
    int depth = 0;
    int precision = 0;
    std::vector<GrowthRow> rows;
};

// Per-order comparison of every b_n in the series against both predictions.
// Rows with n <= depth use the largest admissible depth n-1 for that row.
GrowthReport growth_report(const PerturbationSeries& series, int depth,
                           int precision);

// r-th order Richardson extrapolant of the tail of `sequence`, treating
// entry i as the n = i+1 term of a sequence with corrections in powers of
// 1/n.  Requires sequence length > r.
Real richardson_extrapolate(const std::vector<Real>& sequence, int r);

// Leading small-t form of the discontinuity across the cut:
//   D(-t) = -exp(-1/(60 t)) / (2 sqrt(2 pi t)),  t > 0.
Real discontinuity(const Real& t, int precision);

struct DispersionMoment {
    Real value;     // signed value with D as given
    Real abs_value; // |value|, the growth-prediction normalization
    Real closed_form_reference; // 60^{n+1/2} Gamma(n+1/2) / (2pi)^{3/2}
    Real estimated_error;
    int nodes_used = 0;
};

// The moment integral (1/pi) * Int_0^inf dt D(-t) / t^{n+1}, evaluated after
// the substitution u = 1/(60 t) which maps the leading-form D to a
// Gamma-type integrand.  `D_of_minus_t` receives t > 0 and returns D(-t).
DispersionMoment dispersion_moment(int n, const Integrand& D_of_minus_t,
                                   const QuadratureConfig& config);

struct ImEnergy {
    Real value;
    bool underflowed_to_zero = false; // true when value underflowed exactly
};

// Leading small-eps decay width of the inverted Hamiltonian's ground state:
//   Im E(eps) = exp(-1/(60 eps^2)) / ((2 pi)^{3/2} eps).
ImEnergy im_energy(const Real& eps, int precision);

struct BounceAction {
    Real numeric;                  // 2 Int_0^{1/(4 eps)} sqrt(x^2/4 - eps x^3) dx
    Rat closed_form;               // 1/(60 eps^2), exact
    Real estimated_error;
    int nodes_used = 0;
};

// Bounce action by quadrature under the smoothing substitution
// x = sin^2(theta)/(4 eps), plus the exact closed form.
BounceAction bounce_action(const Rat& eps, const QuadratureConfig& config);

} // namespace ptcubic

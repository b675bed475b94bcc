#pragma once

// Exact-rational Padé approximation of the once-subtracted energy series
//
//     [E(l) - 1/2] / l^2 = sum_{n>=0} c_n t^n,   c_n = b_{n+1},  t = l^2,
//
// plus the diagonal/subdiagonal ladder, the Stieltjes chain diagnostic, and
// the resummed energy estimator.  Index convention: the [N/M] approximant
// has numerator degree <= N, denominator degree <= M, matches the series
// through t^{N+M}, and is normalized so the denominator equals 1 at t = 0.

#include "ptcubic/numeric.hpp"
#include "ptcubic/perturbation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ptcubic {

struct RationalPolynomial {
    // coefficients[i] multiplies t^i; trailing coefficient nonzero unless
    // the polynomial is identically zero (empty list).
    std::vector<Rat> coefficients;

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    Rat operator()(const Rat& t) const; // exact Horner evaluation
};

struct PadeApproximant {
    int num_degree = 0; // N
    int den_degree = 0; // M
    RationalPolynomial numerator;
    RationalPolynomial denominator;
};

// Construct the [N/M] approximant of sum c_n t^n by fraction-free (Bareiss)
// elimination over exact integers after clearing row denominators.  Throws
// PadeError naming (N, M) when the denominator system is singular (blocked
// table); the system is never perturbed.
PadeApproximant build_pade(const std::vector<Rat>& series_coeffs, int N, int M);

// Exact value numerator(t)/denominator(t); PadeError on an exact pole.
Rat evaluate_exact(const PadeApproximant& pa, const Rat& t);

// Exact evaluation followed by correct rounding (half-to-even) to
// `precision` significant decimal digits, returned as an exact rational.
Rat evaluate_rounded(const PadeApproximant& pa, const Rat& t, int precision);

// Convenience: the rounded value as a high-precision real.
Real evaluate(const PadeApproximant& pa, const Rat& t, int precision);

struct PadeLadder {
    Rat t;             // evaluation point t = l^2
    int depth = 0;     // K
    int precision = 0; // stated decimal precision p
    // Values correctly rounded to `precision` significant digits, kept as
    // exact rationals so downstream margin analysis is exact.
    std::vector<Rat> diagonal;    // [N/N](t),   N = 0..K
    std::vector<Rat> subdiagonal; // [N/N+1](t), N = 0..K
};

// Diagonal and subdiagonal values at t for N = 0..depth.  Requires the
// series to supply at least 2*depth + 2 coefficients.  Singular-system
// errors propagate tagged with the offending (N, M).
PadeLadder ladder(const PerturbationSeries& series, const Rat& t, int depth,
                  int precision);

enum class ChainVerdict { holds, violated, inconclusive };

struct ChainViolation {
    std::string comparison; // e.g. "subdiagonal[3] < subdiagonal[4]"
    Rat gap;                // signed gap of the failing comparison
};

struct StieltjesReport {
    ChainVerdict verdict = ChainVerdict::inconclusive;
    bool chain_holds = false; // verdict == holds
    // Present exactly when the chain does not hold: the first comparison
    // that is reversed (verdict violated) or within the margin (verdict
    // inconclusive).
    std::optional<ChainViolation> first_violation;
    Rat min_subdiagonal_gap; // smallest increase along the subdiagonal chain
    Rat min_diagonal_gap;    // smallest decrease along the diagonal chain
    Rat separation_gap;      // min(diagonal) - max(subdiagonal)
    Rat margin;              // strictness threshold 10^{2-p}
};

// Verify, at the ladder's stated precision, that the subdiagonal values
// strictly increase, the diagonal values strictly decrease, and every
// subdiagonal value lies below every diagonal value.  A comparison counts
// as strict only when its gap exceeds 10^{2-p}; reversals beyond the margin
// give verdict `violated`, gaps within the margin give `inconclusive`.
StieltjesReport stieltjes_check(const PadeLadder& ladder);

struct EnergyEstimate {
    Rat lambda;
    int depth = 0;
    int precision = 0;
    Rat diag_energy;    // l^2 * [K/K](l^2) + 1/2, rounded to precision
    Rat offdiag_energy; // l^2 * [K/K+1](l^2) + 1/2, rounded to precision
    Rat average;        // arithmetic mean of the two, rounded to precision
};

// Resummed ground-state energy at coupling lambda from the depth-K ladder.
EnergyEstimate energy_estimate(const PerturbationSeries& series,
                               const Rat& lambda, int depth, int precision);

// Series coefficients c_n = b_{n+1} for n = 0..series.max_order-1.
std::vector<Rat> subtracted_series(const PerturbationSeries& series);

} // namespace ptcubic

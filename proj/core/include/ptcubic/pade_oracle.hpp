#pragma once

// Independent cross-check route for Padé construction: a plain rational
// Gaussian elimination (partial pivoting, no fraction-free tricks) solving
// the same order-matching conditions.  Deliberately naive so that agreement
// with the fraction-free production path is meaningful evidence.

#include "ptcubic/pade.hpp"

#include <vector>

namespace ptcubic {

// Build the [N/M] approximant by brute-force rational linear solve.
// Throws PadeError on a singular system, like build_pade.
PadeApproximant build_pade_oracle(const std::vector<Rat>& series_coeffs, int N,
                                  int M);

// Expand numerator(t) - series(t) * denominator(t) over exact rationals and
// return the lowest power (0-based) with a nonzero coefficient among
// t^0..t^{N+M}, or -1 when all of them vanish (order matching holds).
int order_matching_defect(const PadeApproximant& pa,
                          const std::vector<Rat>& series_coeffs);

} // namespace ptcubic

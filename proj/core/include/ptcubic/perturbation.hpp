#pragma once

// Exact Rayleigh-Schrödinger perturbation series for the ground state of
//
//     H = p^2 + x^2/4 + i l x^3,      E(l) = 1/2 + sum_{n>=1} b_n l^{2n},
//
// generated by the classic polynomial recursion for anharmonic
// perturbations, carried out over exact rationals.  The b_n come out as
// exact integers with strictly alternating signs.

#include "ptcubic/numeric.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace ptcubic {

inline constexpr const char* kHamiltonianTag = "p2+x2/4+i*l*x3";
inline constexpr const char* kCacheHeaderPrefix = "bncache v1 ";

// Default ceiling on the series order; coefficients grow like (2n)! so an
// accidental huge order would exhaust memory long before it finished.
inline constexpr int kDefaultOrderCeiling = 200;

struct PerturbationSeries {
    int max_order = 0;             // number of coefficients computed
    std::vector<Int> coefficients; // b_1..b_max_order (index 0 holds b_1)
    Rat e0 = Rat(1, 2);            // unperturbed ground-state energy
    std::string hamiltonian_tag = kHamiltonianTag;

    // b_n with its natural 1-based index; n in [1, max_order].
    const Int& b(int n) const { return coefficients.at(static_cast<size_t>(n) - 1); }
};

// Working state of the recursion.  After advancing to order k it holds the
// polynomials P_0..P_k (P_j = sum_m poly[j][m] x^m, degree 3j) and the
// energy corrections E_0..E_k of the expansion in the cubic coupling g,
// where E_0 = 1/2, odd E_k vanish, and b_n = (-1)^n E_{2n} under g = i*l.
struct RecursionState {
    int order = 0;                      // highest completed k
    std::vector<std::vector<Rat>> poly; // poly[k][m] = coefficient of x^m in P_k
    std::vector<Rat> energy;            // energy[k] = E_k

    RecursionState();
};

// Extend the state from order k to k+1: solve the order-(k+1) equation
//   -P''_{k+1} + x P'_{k+1} + x^3 P_k = sum_{j=1..k+1} E_j P_{k+1-j}
// coefficient-by-coefficient from degree 3(k+1) downward, with the
// normalization P_{k+1}(0) = 0; the degree-0 consistency condition fixes
// E_{k+1} = -2 a_{k+1,2}.
void advance_order(RecursionState& state);

// Compute b_1..b_max_order exactly.  Internally advances the recursion to
// order 2*max_order, verifying along the way that every odd-order E_k
// vanishes, that each b_n is an integer, and that the signs alternate with
// b_1 > 0.  Throws ResourceError when max_order exceeds order_ceiling.
PerturbationSeries compute_coefficients(int max_order,
                                        int order_ceiling = kDefaultOrderCeiling);

// Persist a series as UTF-8 text:
//   line 1:   "bncache v1 <hamiltonian_tag>"
//   line n+1: "<n>\t<b_n as signed decimal integer>"
// strictly increasing contiguous n, every line newline-terminated, no
// trailing whitespace anywhere.  Refuses to overwrite an existing cache
// whose header names a different hamiltonian_tag.
void write_cache(const PerturbationSeries& series,
                 const std::filesystem::path& destination);

// Read a cache back, validating the exact format (parse errors carry the
// 1-based line number) and the series invariants (sign alternation errors
// name the failing index n).
PerturbationSeries read_cache(const std::filesystem::path& source);

// Like read_cache but without the series-invariant validation; format
// errors still throw.  Used by the verification harness so that a tampered
// cache surfaces as failing criteria instead of a load error.
PerturbationSeries read_cache_unvalidated(const std::filesystem::path& source);

} // namespace ptcubic

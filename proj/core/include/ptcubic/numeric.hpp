#pragma once

// Exact and high-precision number types plus the decimal-string helpers the
// rest of the library builds on.
//
//  - Int  : arbitrary-precision integer (GMP).
//  - Rat  : arbitrary-precision rational (GMP), always canonical.
//  - Real : 120-decimal-digit floating point (MPFR).  A fixed working
//    precision keeps std::numeric_limits fully specialized, which the
//    quadrature and ODE layers rely on.  All printing is capped well below
//    120 digits, so the headroom above the 30-digit default output is large.
//
// Expression templates are switched off so these types behave like ordinary
// value types inside std:: and Boost algorithms.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace ptcubic {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<120>,
                                           boost::multiprecision::et_off>;

// Number of significant decimal digits carried by Real.
inline constexpr int kRealDigits = 120;

// Largest value accepted for user-facing "digits of precision" parameters.
// Kept comfortably below kRealDigits so rounding in the last printed digit
// is always backed by exact or guard-digit arithmetic.
inline constexpr int kMaxPrintDigits = 100;

// Parse an exact rational from text.  Accepts "p/q" (q > 0 after
// normalization), plain integers "-3", and finite decimals "0.125",
// "-2.5e-3" (decimal exponents allowed).  Throws InputError on anything
// else, including empty strings, NaN/inf spellings, and division by zero.
Rat parse_rational(const std::string& text);

// Base-10 integer from an optionally signed digit string.  Unlike the Int
// string constructor this never auto-detects a base, so leading zeros stay
// decimal ("050263" is fifty thousand two hundred sixty-three).
Int parse_integer(const std::string& text);

// Round an exact rational to `digits` significant decimal digits using
// round-half-to-even, returning the rounded value as an exact rational
// (numerator over a power of ten).  digits must be >= 1.
Rat round_to_digits(const Rat& value, int digits);

// Round an exact rational to `places` digits after the decimal point
// (round-half-to-even), returning the rounded value exactly.
Rat round_to_places(const Rat& value, int places);

// Format an exact rational in fixed-point notation with exactly `places`
// digits after the decimal point, correctly rounded (half-to-even).
// round_to_places followed by exact printing: "6.074575311" style.
std::string format_fixed(const Rat& value, int places);

// Format an exact rational with `digits` significant digits, correctly
// rounded, in fixed notation when the exponent is moderate and scientific
// notation otherwise ("1.23456e-8").  Used by the CLI for exact quantities.
std::string format_significant(const Rat& value, int digits);

// Format a Real with `digits` significant digits (shortest faithful form is
// not attempted; this is straight MPFR formatting with trailing-zero trim).
std::string format_real(const Real& value, int digits);

// Exact conversion helpers.
Real to_real(const Rat& value);
Real to_real(const Int& value);

} // namespace ptcubic

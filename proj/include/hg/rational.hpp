#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hg {

// Exact rational scalar. Library arithmetic never leaves the rationals;
// doubles appear only at display boundaries and in forking_margin, and any
// decimal produced from a square root is rendered with a leading "≈".
using Rat = mpq_class;

// Parses "p", "-p", or "p/q" (q > 0 after reduction). Rejects q = 0 and
// malformed text with std::invalid_argument.
Rat rat_from_string(std::string_view text);

// Canonical rendering: reduced, "p" when the denominator is 1, else "p/q"
// with q > 0.
std::string rat_to_string(const Rat& x);

// If x >= 0 is the square of a rational, stores that root (>= 0) in `root`
// and returns true. Exact: checks numerator and denominator for perfect
// squares, no floating point involved.
bool sqrt_exact(const Rat& x, Rat& root);

double to_double(const Rat& x);

// sqrt of an exact squared quantity, for display and decimal margins only.
double sqrt_double(const Rat& x_sq);

// "≈0.70710678" style rendering of sqrt(x_sq).
std::string approx_sqrt_string(const Rat& x_sq, int digits = 8);
std::string approx_string(double x, int digits = 8);

}  // namespace hg

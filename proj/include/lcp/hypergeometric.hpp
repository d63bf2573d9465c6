#pragma once

#include "lcp/types.hpp"

namespace lcp {

/// Incomplete Euler beta B(zeta; alpha, beta) = integral_0^zeta s^{alpha-1} (1-s)^{beta-1} ds
/// along the straight segment 0 -> zeta with principal branches.
///
/// For real zeta > 1 the path runs along the cut of (1-s)^{beta-1}; the
/// value is the boundary limit from the side given by the sign of the zero
/// imaginary part of zeta (+0: from the upper half-plane). Requires
/// alpha > 0, and beta > 0 whenever the path reaches s = 1.
Complex incomplete_beta(Complex zeta, double alpha, double beta);

/// Gauss hypergeometric 2F1(a, b; c; z). Power series for |z| <= 0.8;
/// outside the disk only the pattern c = a + 1 (or c = b + 1) is supported,
/// through B(z; a, 1 - b) = (z^a / a) 2F1(a, b; a + 1; z).
Complex gauss_2f1(double a, double b, double c, Complex z);

}  // namespace lcp

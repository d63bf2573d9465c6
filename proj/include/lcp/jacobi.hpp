#pragma once

#include <span>

#include "lcp/types.hpp"

namespace lcp {

// All elliptic functions and integrals here take the parameter m = k^2.

struct JacobiReal {
  double sn, cn, dn;
};

struct JacobiComplex {
  Complex sn, cn, dn;
};

/// sn, cn, dn at a real argument, 0 <= m <= 1 (descending Landen / AGM).
JacobiReal jacobi_sn_cn_dn(double u, double m);

/// sn, cn, dn at a complex argument for 0 < m < 1, by combining real-argument
/// values at (x | m) and (y | 1 - m). Throws PoleError near u = iK' (mod the
/// period lattice).
JacobiComplex jacobi_sn_cn_dn(Complex u, double m);

/// Complete elliptic integral of the first kind, m < 1, via the AGM.
double elliptic_K(double m);

/// Incomplete elliptic integral of the first kind
///   F(phi | m) = integral_0^{sin phi} dt / (sqrt(1 - t^2) sqrt(1 - m t^2))
/// along the straight segment from 0 to sin(phi), principal branches.
/// A real end point (|Im sin phi| below 1e-14 |sin phi|) is taken on the
/// upper side of any cut the path runs along; m may exceed 1.
Complex elliptic_F(Complex phi, double m);

/// The same integrand integrated along the polyline 0 -> waypoints... ->
/// end (t-plane), for path-independence checks.
Complex elliptic_F_along(std::span<const Complex> t_path, double m);

/// arcsin with the branch pi/2 - i arccosh(x) for real x > 1 (and the
/// mirrored branch for x < -1); std::asin for |x| <= 1.
Complex arcsin_real(double x);

}  // namespace lcp

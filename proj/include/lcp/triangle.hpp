#pragma once

#include <array>

#include "lcp/types.hpp"

namespace lcp {

/// Barycentric coordinates with respect to a triangle's vertices.
struct Barycentric {
  double b1 = 1.0 / 3.0;
  double b2 = 1.0 / 3.0;
  double b3 = 1.0 / 3.0;
};

/// Non-degenerate triangle with counterclockwise vertices.
class Triangle {
 public:
  /// Validates the vertices and reorders them counterclockwise (keeping the
  /// first vertex first). Throws DomainError when area <= 1e-12 * longest side^2.
  static Triangle make(Complex a, Complex b, Complex c);

  const std::array<Complex, 3>& vertices() const { return v_; }
  Complex vertex(int k) const { return v_[k]; }

  /// Interior angles divided by pi, in vertex order. They sum to 1.
  std::array<double, 3> angles_over_pi() const;
  /// Length of side k, which joins vertex k to vertex k + 1 (mod 3).
  std::array<double, 3> side_lengths() const;
  double diameter() const;
  double area() const;
  Complex centroid() const { return (v_[0] + v_[1] + v_[2]) / 3.0; }

  Barycentric barycentric(Complex p) const;
  Complex point(const Barycentric& b) const { return b.b1 * v_[0] + b.b2 * v_[1] + b.b3 * v_[2]; }

  /// Distance to the boundary, positive inside and negative outside.
  double signed_distance(Complex p) const;
  /// Perpendicular distance from p to the line through side k.
  double distance_to_side(Complex p, int k) const;
  bool contains(Complex p, double tol = 0.0) const { return signed_distance(p) >= -tol; }

  /// The image a * T + b.
  Triangle transformed(Complex a, Complex b) const;

 private:
  explicit Triangle(const std::array<Complex, 3>& v) : v_(v) {}
  std::array<Complex, 3> v_;
};

/// Similarity z -> offset + scale * z (or scale * conj(z) when reflect is set).
struct Similarity {
  Complex scale{1.0, 0.0};
  Complex offset{0.0, 0.0};
  bool reflect = false;

  Complex apply(Complex z) const { return offset + scale * (reflect ? std::conj(z) : z); }
  Complex invert(Complex p) const {
    const Complex u = (p - offset) / scale;
    return reflect ? std::conj(u) : u;
  }
  double ratio() const { return std::abs(scale); }
};

}  // namespace lcp

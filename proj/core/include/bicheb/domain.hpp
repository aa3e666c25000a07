#pragma once

#include <string>

namespace bicheb {

/// Axis-aligned rectangle [xlo, xhi] x [ylo, yhi]. Approximants live on
/// [-1, 1]^2 internally and reach this rectangle by an affine map per axis.
struct Domain2 {
  double xlo = -1.0;
  double xhi = 1.0;
  double ylo = -1.0;
  double yhi = 1.0;

  /// Throws ValidationError unless all bounds are finite and lo < hi.
  void validate() const;

  bool is_unit() const noexcept {
    return xlo == -1.0 && xhi == 1.0 && ylo == -1.0 && yhi == 1.0;
  }

  double width_x() const noexcept { return xhi - xlo; }
  double width_y() const noexcept { return yhi - ylo; }

  /// [-1, 1] -> [xlo, xhi]
  double to_x(double u) const noexcept {
    return 0.5 * (xlo + xhi) + 0.5 * (xhi - xlo) * u;
  }
  double to_y(double v) const noexcept {
    return 0.5 * (ylo + yhi) + 0.5 * (yhi - ylo) * v;
  }
  /// [xlo, xhi] -> [-1, 1], unclamped.
  double from_x(double x) const noexcept {
    return (2.0 * x - (xlo + xhi)) / (xhi - xlo);
  }
  double from_y(double y) const noexcept {
    return (2.0 * y - (ylo + yhi)) / (yhi - ylo);
  }

  std::string to_string() const;

  friend bool operator==(const Domain2&, const Domain2&) = default;
};

}  // namespace bicheb

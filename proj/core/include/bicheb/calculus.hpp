#pragma once

#include <span>
#include <vector>

#include "bicheb/cheb2.hpp"

namespace bicheb {

/// Coefficients b of d/dx sum_k a_k T_k, solving the truncated system
///
///   b_0 - b_2 / 2 = a_1,   (b_{k-1} - b_{k+1}) / (2k) = a_k  (k >= 2)
///
/// from the top: b_{n-1} = 2n a_n, b_k = 2(k+1) a_{k+1} + b_{k+2},
/// b_0 = a_1 + b_2 / 2. Input of length n + 1 yields length n (length 1 for
/// a constant, holding zero).
std::vector<double> derivative_coeffs(std::span<const double> a);

/// d/dx of the approximant: degrees (n - 1, m), scaled by 2 / (xhi - xlo).
/// A degree_x of 0 gives the zero function.
Cheb2 diff_x(const Cheb2& c);

/// d/dy of the approximant: degrees (n, m - 1), scaled by 2 / (yhi - ylo).
Cheb2 diff_y(const Cheb2& c);

/// Integral over the domain rectangle,
///
///   (wx wy / 4) * 4 sum_{k, j even} a(k, j) / ((1 - k^2)(1 - j^2)).
///
/// Odd k or j integrate to zero over [-1, 1] and are skipped.
double integrate(const Cheb2& c);

}  // namespace bicheb

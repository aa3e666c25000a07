#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "bicheb/matrix.hpp"

namespace bicheb {

using Complex = std::complex<double>;

/// One p x q period of a doubly periodic complex sequence, indexed (k, j).
using ComplexMatrix = Matrix<Complex>;

constexpr bool is_power_of_two(std::size_t n) noexcept {
  return n != 0 && (n & (n - 1)) == 0;
}

/// Throws InvalidInput for an empty matrix or any NaN/Inf entry.
void require_valid(const ComplexMatrix& x);

/// Unscaled forward 2D DFT evaluated straight from the double sum
///
///   y(r, s) = sum_k sum_j x(k, j) exp(-2 pi i k r / p) exp(-2 pi i j s / q).
///
/// O((pq)^2); kept as the reference the fast path is tested against.
ComplexMatrix dft2_naive(const ComplexMatrix& input);

/// Same contract as dft2_naive, computed by radix-2 row then column FFTs.
/// Both extents must be powers of two; anything else throws UnsupportedSize.
ComplexMatrix fft2(const ComplexMatrix& input);

/// In-place unscaled forward radix-2 DIT FFT of a power-of-two length buffer.
void fft_inplace(std::span<Complex> data);

}  // namespace bicheb

#include "bicheb/fft2d.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "bicheb/error.hpp"

namespace bicheb {

namespace {

// exp(-2 pi i t / n) with t reduced mod n first so large products k*r do not
// lose precision in the angle.
Complex unit_root(std::size_t t, std::size_t n) {
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(t % n) /
                       static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

std::vector<Complex> twiddles(std::size_t n) {
  std::vector<Complex> w(n / 2);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = unit_root(k, n);
  return w;
}

void bit_reverse(std::span<Complex> data) {
  const std::size_t n = data.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
}

void fft_with_twiddles(std::span<Complex> data, const std::vector<Complex>& w) {
  const std::size_t n = data.size();
  bit_reverse(data);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const Complex t = w[k * stride] * data[start + k + half];
        const Complex u = data[start + k];
        data[start + k] = u + t;
        data[start + k + half] = u - t;
      }
    }
  }
}

}  // namespace

void require_valid(const ComplexMatrix& x) {
  if (x.rows() == 0 || x.cols() == 0)
    throw InvalidInput("complex matrix must be at least 1x1");
  for (std::size_t k = 0; k < x.rows(); ++k) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Complex v = x(k, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw InvalidInput("non-finite entry at (" + std::to_string(k) + ", " +
                           std::to_string(j) + ")");
    }
  }
}

ComplexMatrix dft2_naive(const ComplexMatrix& input) {
  require_valid(input);
  const std::size_t p = input.rows();
  const std::size_t q = input.cols();
  std::vector<Complex> wp(p), wq(q);
  for (std::size_t t = 0; t < p; ++t) wp[t] = unit_root(t, p);
  for (std::size_t t = 0; t < q; ++t) wq[t] = unit_root(t, q);

  ComplexMatrix out(p, q);
  for (std::size_t r = 0; r < p; ++r) {
    for (std::size_t s = 0; s < q; ++s) {
      Complex acc{};
      for (std::size_t k = 0; k < p; ++k) {
        const Complex wr = wp[(k * r) % p];
        for (std::size_t j = 0; j < q; ++j)
          acc += input(k, j) * wr * wq[(j * s) % q];
      }
      out(r, s) = acc;
    }
  }
  return out;
}

void fft_inplace(std::span<Complex> data) {
  if (!is_power_of_two(data.size()))
    throw UnsupportedSize("FFT length " + std::to_string(data.size()) +
                          " is not a power of two");
  if (data.size() == 1) return;
  fft_with_twiddles(data, twiddles(data.size()));
}

ComplexMatrix fft2(const ComplexMatrix& input) {
  require_valid(input);
  const std::size_t p = input.rows();
  const std::size_t q = input.cols();
  if (!is_power_of_two(p) || !is_power_of_two(q))
    throw UnsupportedSize("fft2 needs power-of-two extents, got " +
                          std::to_string(p) + "x" + std::to_string(q));

  ComplexMatrix out = input;
  if (q > 1) {
    const auto w = twiddles(q);
    for (std::size_t k = 0; k < p; ++k) fft_with_twiddles(out.row(k), w);
  }
  if (p > 1) {
    const auto w = twiddles(p);
    std::vector<Complex> column(p);
    for (std::size_t j = 0; j < q; ++j) {
      for (std::size_t k = 0; k < p; ++k) column[k] = out(k, j);
      fft_with_twiddles(column, w);
      for (std::size_t k = 0; k < p; ++k) out(k, j) = column[k];
    }
  }
  return out;
}

}  // namespace bicheb

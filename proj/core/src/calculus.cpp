#include "bicheb/calculus.hpp"

#include <utility>

namespace bicheb {

std::vector<double> derivative_coeffs(std::span<const double> a) {
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 1) return {0.0};

  // Two extra zero slots so b_{k+2} is always readable.
  std::vector<double> b(static_cast<std::size_t>(n) + 2, 0.0);
  for (int k = n - 1; k >= 1; --k) b[k] = 2.0 * (k + 1) * a[k + 1] + b[k + 2];
  b[0] = a[1] + 0.5 * b[2];
  b.resize(n);
  return b;
}

Cheb2 diff_x(const Cheb2& c) {
  const auto& a = c.coeffs();
  const std::size_t rows = a.rows() > 1 ? a.rows() - 1 : 1;
  const double scale = 2.0 / c.domain().width_x();

  Matrix<double> out(rows, a.cols());
  std::vector<double> column(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t k = 0; k < a.rows(); ++k) column[k] = a(k, j);
    const auto b = derivative_coeffs(column);
    for (std::size_t k = 0; k < rows; ++k) out(k, j) = scale * b[k];
  }
  return Cheb2(std::move(out), c.domain(), c.tol());
}

Cheb2 diff_y(const Cheb2& c) {
  const auto& a = c.coeffs();
  const std::size_t cols = a.cols() > 1 ? a.cols() - 1 : 1;
  const double scale = 2.0 / c.domain().width_y();

  Matrix<double> out(a.rows(), cols);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const auto b = derivative_coeffs(a.row(k));
    for (std::size_t j = 0; j < cols; ++j) out(k, j) = scale * b[j];
  }
  return Cheb2(std::move(out), c.domain(), c.tol());
}

double integrate(const Cheb2& c) {
  const auto& a = c.coeffs();
  double sum = 0.0;
  for (std::size_t k = 0; k < a.rows(); k += 2) {
    const double wk = 1.0 - static_cast<double>(k * k);
    for (std::size_t j = 0; j < a.cols(); j += 2) {
      const double wj = 1.0 - static_cast<double>(j * j);
      sum += a(k, j) / (wk * wj);
    }
  }
  const double jacobian = c.domain().width_x() * c.domain().width_y() / 4.0;
  return jacobian * 4.0 * sum;
}

}  // namespace bicheb

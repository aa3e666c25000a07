#include "bicheb/chebyshev.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "bicheb/error.hpp"

namespace bicheb {

namespace {

double clamp_unit(double x) {
  if (!(std::abs(x) <= 1.0 + kUnitOvershoot))
    throw DomainError("Chebyshev argument " + std::to_string(x) +
                      " outside [-1, 1]");
  return std::clamp(x, -1.0, 1.0);
}

}  // namespace

double cheb_t(int k, double x) {
  if (k < 0) throw DomainError("negative Chebyshev degree");
  x = clamp_unit(x);
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int i = 1; i < k; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> cheb_vector(int n, double x) {
  if (n < 0) throw DomainError("negative Chebyshev degree");
  x = clamp_unit(x);
  std::vector<double> t(static_cast<std::size_t>(n) + 1);
  t[0] = 1.0;
  if (n >= 1) t[1] = x;
  for (int k = 2; k <= n; ++k) t[k] = 2.0 * x * t[k - 1] - t[k - 2];
  return t;
}

double clenshaw(std::span<const double> coeffs, double x) {
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = coeffs.size(); k-- > 1;) {
    const double b0 = coeffs[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  const double c0 = coeffs.empty() ? 0.0 : coeffs[0];
  return c0 + x * b1 - b2;
}

double periodic_node(int k, int m) {
  const int kk = std::min(k, m - k);
  return std::sin(std::numbers::pi * static_cast<double>(m - 4 * kk) /
                  (2.0 * static_cast<double>(m)));
}

}  // namespace bicheb

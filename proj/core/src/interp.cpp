#include "bicheb/interp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bicheb/error.hpp"

namespace bicheb {

namespace {

// T_i(cos(k pi / n)) = cos(i k pi / n), reduced mod 2n before the cosine.
Matrix<double> node_basis(int n) {
  Matrix<double> t(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n; ++k)
      t(i, k) = std::cos(std::numbers::pi * ((i * k) % (2 * n)) / n);
  return t;
}

}  // namespace

LobattoGrid lobatto_grid(int n) {
  if (n < 1) throw DomainError("Lobatto grid needs degree >= 1, got " + std::to_string(n));
  LobattoGrid g{n, std::vector<double>(n + 1), std::vector<double>(n + 1, 1.0)};
  for (int i = 0; i <= n; ++i)
    g.nodes[i] = std::sin(std::numbers::pi * (n - 2 * i) / (2.0 * n));
  g.weights.front() = 0.5;
  g.weights.back() = 0.5;
  return g;
}

InterpCoeffs lagrange_cheb_coeffs(const Function2& f, int n, int m,
                                  const Domain2& domain) {
  domain.validate();
  const LobattoGrid gx = lobatto_grid(n);
  const LobattoGrid gy = lobatto_grid(m);

  Matrix<double> samples(n + 1, m + 1);
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= m; ++l) {
      const double x = domain.to_x(gx.nodes[k]);
      const double y = domain.to_y(gy.nodes[l]);
      const double v = f(x, y);
      if (!std::isfinite(v))
        throw SamplingError("f(" + std::to_string(x) + ", " + std::to_string(y) +
                                ") is not finite at Lobatto node (" +
                                std::to_string(k) + ", " + std::to_string(l) + ")",
                            x, y);
      samples(k, l) = gx.weights[k] * gy.weights[l] * v;
    }
  }

  const Matrix<double> tx = node_basis(n);
  const Matrix<double> ty = node_basis(m);

  // Contract over l first: partial(k, j) = sum_l samples(k, l) T_j(y_l).
  Matrix<double> partial(n + 1, m + 1);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= m; ++j) {
      double s = 0.0;
      for (int l = 0; l <= m; ++l) s += samples(k, l) * ty(j, l);
      partial(k, j) = s;
    }

  InterpCoeffs out{Matrix<double>(n + 1, m + 1)};
  const double scale = 4.0 / (static_cast<double>(n) * m);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= m; ++j) {
      double s = 0.0;
      for (int k = 0; k <= n; ++k) s += tx(i, k) * partial(k, j);
      out.c(i, j) = scale * gx.weights[i] * gy.weights[j] * s;
    }
  return out;
}

Cheb2 to_cheb2(const InterpCoeffs& ic, const Domain2& domain, double tol) {
  return Cheb2(ic.c, domain, tol);
}

int alias_index(int s, int n) {
  const int r = s % (2 * n);
  return r <= n ? r : 2 * n - r;
}

InterpCoeffs aliasing_coeffs(const Matrix<double>& alpha, int n, int m, int cutoff) {
  if (n < 1 || m < 1) throw DomainError("aliasing needs degrees >= 1");
  if (cutoff < 0) throw DomainError("negative aliasing cutoff");
  const std::size_t smax = static_cast<std::size_t>(2 * n * cutoff + n);
  const std::size_t tmax = static_cast<std::size_t>(2 * m * cutoff + m);

  InterpCoeffs out{Matrix<double>(n + 1, m + 1)};
  for (std::size_t s = 0; s < alpha.rows() && s <= smax; ++s) {
    const int i = alias_index(static_cast<int>(s), n);
    for (std::size_t t = 0; t < alpha.cols() && t <= tmax; ++t)
      out.c(i, alias_index(static_cast<int>(t), m)) += alpha(s, t);
  }
  return out;
}

double interp_error_bound_gap(const Matrix<double>& alpha, int n, int m) {
  double gap = 0.0;
  for (std::size_t i = 0; i < alpha.rows(); ++i) {
    for (std::size_t j = 0; j < alpha.cols(); ++j) {
      const bool tail = static_cast<int>(i) > n || static_cast<int>(j) > m;
      if (tail) gap += std::abs(alpha(i, j));
    }
  }
  return gap;
}

}  // namespace bicheb

#pragma once

#include <vector>

#include "bicheb/cheb2.hpp"
#include "bicheb/domain.hpp"
#include "bicheb/matrix.hpp"

namespace bicheb {

/// Chebyshev-Lobatto nodes cos(i pi / n), i = 0..n, running from 1 down to
/// -1, with the trapezoid weights gamma_i (1/2 at both ends, 1 inside).
struct LobattoGrid {
  int n = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Throws DomainError for n < 1.
LobattoGrid lobatto_grid(int n);

/// Coefficients c(i, j), 0 <= i <= n, 0 <= j <= m, of the degree-(n, m)
/// polynomial matching f on the product Lobatto grid, in the T_i(x) T_j(y)
/// basis (unit-square coordinates).
struct InterpCoeffs {
  Matrix<double> c;
};

/// Direct double sum using discrete orthogonality on the Lobatto grid:
///
///   c(i, j) = 4/(nm) g_i g_j sum_k sum_l g_k g_l f(x_k, y_l) T_i(x_k) T_j(y_l)
///
/// with g the Lobatto weights. O(n^2 m^2). Nodes are mapped into `domain`
/// before f is evaluated.
InterpCoeffs lagrange_cheb_coeffs(const Function2& f, int n, int m,
                                  const Domain2& domain = {});

/// The interpolant as an approximant object on `domain`.
Cheb2 to_cheb2(const InterpCoeffs& ic, const Domain2& domain = {}, double tol = 0.0);

/// Lobatto-grid index that series degree s aliases onto: T_s and T_fold(s)
/// agree at every node cos(k pi / n).
int alias_index(int s, int n);

/// Folds series coefficients alpha onto a degree-(n, m) interpolant:
/// every alpha(s, t) is added to c(fold(s), fold(t)), i.e. to the entry
/// whose index pair is reachable as (2pn +- i, 2qm +- j). Each (s, t) is
/// counted once. Only s <= 2n*cutoff + n and t <= 2m*cutoff + m contribute.
InterpCoeffs aliasing_coeffs(const Matrix<double>& alpha, int n, int m,
                             int cutoff = 8);

/// Tail sum bounding |L_{n,m} - f_{n,m}|:
///   sum_{i <= n, j > m} |alpha(i, j)| + sum_{i > n, all j} |alpha(i, j)|.
double interp_error_bound_gap(const Matrix<double>& alpha, int n, int m);

}  // namespace bicheb

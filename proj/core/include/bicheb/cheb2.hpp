#pragma once

#include <functional>

#include "bicheb/domain.hpp"
#include "bicheb/matrix.hpp"

namespace bicheb {

/// A real function of two variables. Builders may call it from several
/// threads only when BuildOptions::parallel_sampling is set.
using Function2 = std::function<double(double, double)>;

/// Samples f(x_k, y_j) on the m x m periodic Chebyshev grid, where x_k and
/// y_j are the images of cos(2 pi k / m) under the domain map.
struct SampleGrid {
  int size = 0;
  Domain2 domain;
  Matrix<double> values;
};

/// Throws SamplingError naming the node if f returns NaN/Inf there.
SampleGrid sample_grid(const Function2& f, int m, const Domain2& domain = {},
                       bool parallel = false);

/// Trapezoid-rule (aliased) Chebyshev coefficients of degree <= n in each
/// variable, read off the unscaled 2D FFT g of the samples:
///
///   alpha(0,0) = Re g(0,0) / m^2,   alpha(k,0) = 2 Re g(k,0) / m^2,
///   alpha(0,j) = 2 Re g(0,j) / m^2, alpha(k,j) = 4 Re g(k,j) / m^2.
///
/// Requires 1 <= n <= m / 2. At n = m / 2 the Nyquist row and column have no
/// mirror partner in the transform and take half the usual factor.
Matrix<double> coeffs_from_samples(const SampleGrid& grid, int n);

/// Bivariate Chebyshev approximant sum alpha(k,j) T_k(u) T_j(v), with (u, v)
/// the affine image of (x, y) in [-1, 1]^2. Immutable once constructed.
class Cheb2 {
 public:
  /// Entries with |alpha| < tol are stored as exact zeros. Throws
  /// ValidationError on an empty or non-finite matrix, a negative tol or an
  /// invalid domain.
  explicit Cheb2(Matrix<double> coeffs, Domain2 domain = {}, double tol = 0.0);

  int degree_x() const noexcept { return static_cast<int>(coeffs_.rows()) - 1; }
  int degree_y() const noexcept { return static_cast<int>(coeffs_.cols()) - 1; }
  const Matrix<double>& coeffs() const noexcept { return coeffs_; }
  const Domain2& domain() const noexcept { return domain_; }
  double tol() const noexcept { return tol_; }

  /// Leading (nx + 1) x (ny + 1) corner of the series.
  Cheb2 truncated(int nx, int ny) const;

  /// Same series with trailing all-zero rows and columns removed.
  Cheb2 compacted() const;

  double operator()(double x, double y) const;

 private:
  Matrix<double> coeffs_;
  Domain2 domain_;
  double tol_;
};

struct BuildOptions {
  double tol = 1e-15;
  /// Compare coefficients against tol * max|sample| instead of tol.
  bool relative_tol = false;
  int initial_degree = 8;
  int max_degree = 8192;
  /// Caller asserts f is pure; samples may then be taken concurrently.
  bool parallel_sampling = false;
};

/// Adaptive construction: starting from n = initial_degree, sample on the
/// m = 2n grid, form the (n + 1) x (n + 1) coefficient block and stop once
/// its last two rows and last two columns are all below tol; otherwise
/// double n. The accepted block is trimmed at tol and stripped of trailing
/// zero rows/columns. Throws NoConvergence if n would pass max_degree.
Cheb2 build_adaptive(const Function2& f, const Domain2& domain = {},
                     const BuildOptions& options = {});

/// V_n(u)' A V_m(v), forming both Chebyshev vectors explicitly.
double evaluate_matrix(const Cheb2& c, double x, double y);

/// Clenshaw along y for every row, then Clenshaw along x over the row sums.
double evaluate_clenshaw(const Cheb2& c, double x, double y);

/// Weighted L2 mass of f not captured by the retained coefficients:
///
///   (1/pi^2) int int f^2 / sqrt((1-x^2)(1-y^2))
///     - [a00^2 + 1/2 sum_k ak0^2 + 1/2 sum_j a0j^2 + 1/4 sum_kj akj^2]
///
/// The integral is the mean of f(cos t, cos s)^2 over a periodic grid twice as
/// fine as the one the approximant needs, read from the (0, 0) FFT entry.
/// Rounding can make the result slightly negative; it is returned as-is.
double parseval_indicator(const Cheb2& c, const Function2& f);

/// Independent estimate of alpha(k, j) from the cosine integral
/// (4/pi^2) int_0^pi int_0^pi f(cos t, cos s) cos(kt) cos(js) dt ds
/// using the N-point midpoint rule in t and s; edge factors 1/2 (k or j
/// zero) and 1/4 (both zero). Requires N >= 4 max(k, j) + 16.
double coeffs_by_quadrature(const Function2& f, int k, int j, int nodes,
                            const Domain2& domain = {});

/// Upper bounds on the second derivatives of f over its domain, used by the
/// coefficient decay estimates below (unit domain assumed).
struct DecayBounds {
  double m20 = 0.0;  // |d2f/dx2|
  double m02 = 0.0;  // |d2f/dy2|
  double m11 = 0.0;  // |d2f/dxdy|

  void validate() const;

  /// |alpha(n, 0)| <= 2 M20 / (n-1)^2, n > 1.
  double row0(int n) const;
  /// |alpha(n, 1)| <= 8 M20 / (pi (n-1)^2), n > 1.
  double row1(int n) const;
  /// |alpha(0, m)| <= 2 M02 / (m-1)^2, m > 1.
  double col0(int m) const;
  /// |alpha(1, m)| <= 8 M02 / (pi (m-1)^2), m > 1.
  double col1(int m) const;
};

}  // namespace bicheb

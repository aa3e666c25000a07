#include "bicheb/cheb2.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bicheb/chebyshev.hpp"
#include "bicheb/error.hpp"
#include "bicheb/fft2d.hpp"

namespace bicheb {

namespace {

void sample_rows(const Function2& f, const SampleGrid& grid,
                 const std::vector<double>& xs, const std::vector<double>& ys,
                 Matrix<double>& out, int row_begin, int row_end) {
  const int m = grid.size;
  for (int k = row_begin; k < row_end; ++k) {
    for (int j = 0; j < m; ++j) {
      const double v = f(xs[k], ys[j]);
      if (!std::isfinite(v))
        throw SamplingError("f(" + std::to_string(xs[k]) + ", " +
                                std::to_string(ys[j]) + ") = " +
                                std::to_string(v) + " at grid node (" +
                                std::to_string(k) + ", " + std::to_string(j) +
                                ")",
                            xs[k], ys[j]);
      out(k, j) = v;
    }
  }
}

double max_abs(std::span<const double> values) {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

// Largest |a| in the last two rows and last two columns of a square block.
double tail_magnitude(const Matrix<double>& a) {
  const std::size_t n = a.rows() - 1;
  const std::size_t first = n >= 1 ? n - 1 : 0;
  double tail = 0.0;
  for (std::size_t i = first; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      tail = std::max(tail, std::abs(a(i, j)));
      tail = std::max(tail, std::abs(a(j, i)));
    }
  }
  return tail;
}

std::pair<double, double> to_unit(const Domain2& d, double x, double y) {
  const double u = d.from_x(x);
  const double v = d.from_y(y);
  if (!(std::abs(u) <= 1.0 + kUnitOvershoot) ||
      !(std::abs(v) <= 1.0 + kUnitOvershoot))
    throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") lies outside " + d.to_string());
  return {std::clamp(u, -1.0, 1.0), std::clamp(v, -1.0, 1.0)};
}

int next_power_of_two(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

SampleGrid sample_grid(const Function2& f, int m, const Domain2& domain,
                       bool parallel) {
  if (m < 2 || !is_power_of_two(static_cast<std::size_t>(m)))
    throw InvalidInput("grid size must be a power of two >= 2, got " +
                       std::to_string(m));
  domain.validate();

  SampleGrid grid{m, domain, Matrix<double>(m, m)};
  std::vector<double> xs(m), ys(m);
  for (int k = 0; k < m; ++k) {
    const double node = periodic_node(k, m);
    xs[k] = domain.to_x(node);
    ys[k] = domain.to_y(node);
  }

  const int workers =
      parallel ? std::clamp(static_cast<int>(std::thread::hardware_concurrency()),
                            1, m)
               : 1;
  if (workers == 1) {
    sample_rows(f, grid, xs, ys, grid.values, 0, m);
    return grid;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const int chunk = (m + workers - 1) / workers;
    for (int begin = 0; begin < m; begin += chunk) {
      const int end = std::min(m, begin + chunk);
      pool.emplace_back([&, begin, end] {
        try {
          sample_rows(f, grid, xs, ys, grid.values, begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return grid;
}

Matrix<double> coeffs_from_samples(const SampleGrid& grid, int n) {
  const int m = grid.size;
  if (n < 1 || 2 * n > m)
    throw InvalidInput("degree " + std::to_string(n) +
                       " needs a sample grid of at least " +
                       std::to_string(2 * n) + " points, got " +
                       std::to_string(m));

  ComplexMatrix z(m, m);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) z(k, j) = grid.values(k, j);
  const ComplexMatrix g = fft2(z);

  const double inv = 1.0 / (static_cast<double>(m) * static_cast<double>(m));
  auto edge = [m](int k) { return (k == 0 || 2 * k == m) ? 1.0 : 2.0; };

  Matrix<double> a(n + 1, n + 1);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j)
      a(k, j) = edge(k) * edge(j) * g(k, j).real() * inv;
  return a;
}

Cheb2::Cheb2(Matrix<double> coeffs, Domain2 domain, double tol)
    : coeffs_(std::move(coeffs)), domain_(domain), tol_(tol) {
  domain_.validate();
  if (!(tol_ >= 0.0) || !std::isfinite(tol_))
    throw ValidationError("tolerance must be finite and nonnegative");
  if (coeffs_.empty())
    throw ValidationError("coefficient matrix must be at least 1x1");
  for (double& v : coeffs_.data()) {
    if (!std::isfinite(v))
      throw ValidationError("non-finite Chebyshev coefficient");
    if (std::abs(v) < tol_) v = 0.0;
  }
}

Cheb2 Cheb2::truncated(int nx, int ny) const {
  if (nx < 0 || ny < 0) throw DomainError("negative truncation degree");
  return Cheb2(coeffs_.block(nx + 1, ny + 1), domain_, tol_);
}

Cheb2 Cheb2::compacted() const {
  std::size_t rows = 1, cols = 1;
  for (std::size_t k = 0; k < coeffs_.rows(); ++k) {
    for (std::size_t j = 0; j < coeffs_.cols(); ++j) {
      if (coeffs_(k, j) != 0.0) {
        rows = std::max(rows, k + 1);
        cols = std::max(cols, j + 1);
      }
    }
  }
  return Cheb2(coeffs_.block(rows, cols), domain_, tol_);
}

double Cheb2::operator()(double x, double y) const {
  return evaluate_matrix(*this, x, y);
}

Cheb2 build_adaptive(const Function2& f, const Domain2& domain,
                     const BuildOptions& options) {
  if (!(options.tol > 0.0) || !std::isfinite(options.tol))
    throw InvalidInput("tol must be positive");
  const auto n0 = options.initial_degree;
  if (n0 < 2 || !is_power_of_two(static_cast<std::size_t>(n0)))
    throw InvalidInput("initial degree must be a power of two >= 2");
  if (options.max_degree < n0 ||
      !is_power_of_two(static_cast<std::size_t>(options.max_degree)))
    throw InvalidInput("max degree must be a power of two >= initial degree");

  int n = n0;
  for (;;) {
    const SampleGrid grid = sample_grid(f, 2 * n, domain, options.parallel_sampling);
    Matrix<double> a = coeffs_from_samples(grid, n);

    const double scale = max_abs(grid.values.data());
    const double threshold =
        (options.relative_tol && scale > 0.0) ? options.tol * scale : options.tol;
    const double tail = tail_magnitude(a);
    if (tail < threshold) return Cheb2(std::move(a), domain, threshold).compacted();

    if (2 * n > options.max_degree)
      throw NoConvergence("no convergence up to degree " + std::to_string(n) +
                              ": tail coefficients still reach " +
                              std::to_string(tail),
                          n, tail);
    n *= 2;
  }
}

double evaluate_matrix(const Cheb2& c, double x, double y) {
  const auto [u, v] = to_unit(c.domain(), x, y);
  const auto tx = cheb_vector(c.degree_x(), u);
  const auto ty = cheb_vector(c.degree_y(), v);
  const auto& a = c.coeffs();
  double sum = 0.0;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += a(k, j) * ty[j];
    sum += tx[k] * row;
  }
  return sum;
}

double evaluate_clenshaw(const Cheb2& c, double x, double y) {
  const auto [u, v] = to_unit(c.domain(), x, y);
  const auto& a = c.coeffs();
  std::vector<double> rows(a.rows());
  for (std::size_t k = 0; k < a.rows(); ++k) rows[k] = clenshaw(a.row(k), v);
  return clenshaw(rows, u);
}

double parseval_indicator(const Cheb2& c, const Function2& f) {
  const int degree = std::max(c.degree_x(), c.degree_y());
  const int m = 2 * next_power_of_two(std::max(2 * degree, 16));
  const SampleGrid grid = sample_grid(f, m, c.domain());

  ComplexMatrix squares(m, m);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) squares(k, j) = grid.values(k, j) * grid.values(k, j);
  const double mass =
      fft2(squares)(0, 0).real() / (static_cast<double>(m) * static_cast<double>(m));

  const auto& a = c.coeffs();
  double captured = 0.0;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double w = (k == 0 ? 1.0 : 0.5) * (j == 0 ? 1.0 : 0.5);
      captured += w * a(k, j) * a(k, j);
    }
  }
  return mass - captured;
}

double coeffs_by_quadrature(const Function2& f, int k, int j, int nodes,
                            const Domain2& domain) {
  if (k < 0 || j < 0) throw InvalidInput("negative coefficient index");
  if (nodes < 4 * std::max(k, j) + 16)
    throw InvalidInput("quadrature needs at least 4 max(k, j) + 16 nodes");
  domain.validate();

  const double h = std::numbers::pi / nodes;
  std::vector<double> xs(nodes), ys(nodes), ck(nodes), cj(nodes);
  for (int i = 0; i < nodes; ++i) {
    const double t = (i + 0.5) * h;
    xs[i] = domain.to_x(std::cos(t));
    ys[i] = domain.to_y(std::cos(t));
    ck[i] = std::cos(k * t);
    cj[i] = std::cos(j * t);
  }

  double sum = 0.0;
  for (int a = 0; a < nodes; ++a) {
    double inner = 0.0;
    for (int b = 0; b < nodes; ++b) {
      const double v = f(xs[a], ys[b]);
      if (!std::isfinite(v))
        throw SamplingError("non-finite sample in quadrature", xs[a], ys[b]);
      inner += v * cj[b];
    }
    sum += inner * ck[a];
  }
  const double edge = (k == 0 ? 0.5 : 1.0) * (j == 0 ? 0.5 : 1.0);
  return 4.0 * edge * sum / (static_cast<double>(nodes) * nodes);
}

void DecayBounds::validate() const {
  for (double m : {m20, m02, m11})
    if (!(m >= 0.0) || !std::isfinite(m))
      throw ValidationError("decay bounds must be finite and nonnegative");
}

namespace {
double inverse_square_gap(int n) {
  if (n <= 1) throw DomainError("decay bounds apply to indices > 1");
  return 1.0 / ((n - 1.0) * (n - 1.0));
}
}  // namespace

double DecayBounds::row0(int n) const { return 2.0 * m20 * inverse_square_gap(n); }
double DecayBounds::row1(int n) const {
  return 8.0 * m20 * inverse_square_gap(n) / std::numbers::pi;
}
double DecayBounds::col0(int m) const { return 2.0 * m02 * inverse_square_gap(m); }
double DecayBounds::col1(int m) const {
  return 8.0 * m02 * inverse_square_gap(m) / std::numbers::pi;
}

}  // namespace bicheb

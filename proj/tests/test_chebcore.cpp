#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "bicheb/cheb2.hpp"
#include "bicheb/chebyshev.hpp"
#include "bicheb/error.hpp"
#include "bicheb/sparse.hpp"
#include "test_support.hpp"

namespace bicheb {
namespace {

using testing::cheb_trig;
using testing::cos_xy;
using testing::example2;

// Values printed in the reference table for cos(xy), rounded to 9 digits.
struct TableEntry {
  int k, j;
  double value;
};
constexpr TableEntry kCosXyTable[] = {
    {0, 0, 0.880725579},  {0, 2, -0.117388011}, {2, 0, -0.117388011},
    {0, 4, 0.001873213},  {4, 0, 0.001873213},  {2, 2, -0.114883808},
    {2, 4, 0.002484444},  {4, 2, 0.002484444},  {4, 4, 0.000603385},
};

// ---------------------------------------------------------------- basis

TEST(ChebT, ClosedForms) {
  EXPECT_EQ(cheb_t(0, 0.37), 1.0);
  EXPECT_NEAR(cheb_t(2, 0.5), -0.5, 1e-15);
  EXPECT_NEAR(cheb_t(3, 0.8), -0.352, 1e-15);
}

TEST(ChebT, MatchesTrigDefinition) {
  for (int k = 0; k <= 40; ++k)
    for (double x : {-1.0, -0.93, -0.2, 0.0, 0.41, 0.77, 1.0})
      EXPECT_NEAR(cheb_t(k, x), cheb_trig(k, x), 1e-13) << k << " " << x;
}

TEST(ChebT, DomainHandling) {
  EXPECT_NEAR(cheb_t(5, 1.0 + 5e-13), 1.0, 1e-15);
  EXPECT_THROW(cheb_t(2, 1.001), DomainError);
  EXPECT_THROW(cheb_t(-1, 0.0), DomainError);
  EXPECT_THROW(cheb_t(1, std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(ChebVector, Examples) {
  EXPECT_EQ(cheb_vector(2, 1.0), (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(cheb_vector(3, -1.0), (std::vector<double>{1, -1, 1, -1}));
  EXPECT_EQ(cheb_vector(4, 0.0), (std::vector<double>{1, 0, -1, 0, 1}));
  const auto v = cheb_vector(12, 0.3);
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(v[k], cheb_t(k, 0.3));
}

TEST(PeriodicNode, SymmetricAndExactZero) {
  for (int m : {4, 16, 256}) {
    EXPECT_EQ(periodic_node(m / 4, m), 0.0);
    EXPECT_EQ(periodic_node(0, m), 1.0);
    EXPECT_EQ(periodic_node(m / 2, m), -1.0);
    for (int k = 1; k < m; ++k) {
      EXPECT_EQ(periodic_node(k, m), periodic_node(m - k, m));
      EXPECT_NEAR(periodic_node(k, m), std::cos(2 * std::numbers::pi * k / m), 1e-15);
    }
  }
}

// ---------------------------------------------------------------- sampling

TEST(SampleGrid, Constant) {
  const auto g = sample_grid([](double, double) { return 5.0; }, 4);
  ASSERT_EQ(g.values.rows(), 4u);
  for (double v : g.values.data()) EXPECT_EQ(v, 5.0);
}

TEST(SampleGrid, IdentityInX) {
  const auto g = sample_grid([](double x, double) { return x; }, 4);
  const double expected[] = {1, 0, -1, 0};
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(g.values(k, j), expected[k]);
}

TEST(SampleGrid, CosXyMatchesDirectEvaluation) {
  const auto g = sample_grid(cos_xy, 16);
  for (int k = 0; k < 16; ++k)
    for (int j = 0; j < 16; ++j) {
      const double x = std::cos(2 * std::numbers::pi * k / 16);
      const double y = std::cos(2 * std::numbers::pi * j / 16);
      EXPECT_NEAR(g.values(k, j), std::cos(x * y), 1e-15);
    }
}

TEST(SampleGrid, ExactSymmetryAndMappedDomain) {
  const Domain2 d{0.0, 3.0, -2.0, 5.0};
  const auto g = sample_grid([](double x, double y) { return std::sin(x) * y + x; }, 32, d);
  const int m = 32;
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) {
      EXPECT_EQ(g.values(k, j), g.values((m - k) % m, j));
      EXPECT_EQ(g.values(k, j), g.values(k, (m - j) % m));
    }
  EXPECT_DOUBLE_EQ(g.values(0, 0), std::sin(3.0) * 5.0 + 3.0);
  EXPECT_DOUBLE_EQ(g.values(16, 16), std::sin(0.0) * -2.0 + 0.0);
}

TEST(SampleGrid, ParallelMatchesSequential) {
  const auto a = sample_grid(example2, 128, {}, false);
  const auto b = sample_grid(example2, 128, {}, true);
  EXPECT_EQ(a.values, b.values);
}

TEST(SampleGrid, Errors) {
  EXPECT_THROW(sample_grid(cos_xy, 6), InvalidInput);
  EXPECT_THROW(sample_grid(cos_xy, 1), InvalidInput);
  EXPECT_THROW(sample_grid(cos_xy, 8, Domain2{1, 0, -1, 1}), ValidationError);
  try {
    sample_grid([](double x, double) { return 1.0 / (x + 1.0) - 1.0 / (x + 1.0); }, 8);
    FAIL() << "expected SamplingError";
  } catch (const SamplingError& e) {
    EXPECT_EQ(e.x(), -1.0);
    EXPECT_NE(std::string(e.what()).find("grid node (4,"), std::string::npos) << e.what();
  }
  EXPECT_THROW(sample_grid([](double x, double) { return std::log(x); }, 64, {}, true),
               SamplingError);
}

// -------------------------------------------------------- coeffs from samples

TEST(CoeffsFromSamples, ConstantIsPureT0) {
  const auto a = coeffs_from_samples(sample_grid([](double, double) { return 1.0; }, 16), 7);
  ASSERT_EQ(a.rows(), 8u);
  for (int k = 0; k <= 7; ++k)
    for (int j = 0; j <= 7; ++j)
      EXPECT_NEAR(a(k, j), (k == 0 && j == 0) ? 1.0 : 0.0, 1e-14);
}

TEST(CoeffsFromSamples, ProductOfChebyshevPolynomials) {
  const auto f = [](double x, double y) { return cheb_trig(2, x) * cheb_trig(3, y); };
  const auto a = coeffs_from_samples(sample_grid(f, 16), 7);
  for (int k = 0; k <= 7; ++k)
    for (int j = 0; j <= 7; ++j)
      EXPECT_NEAR(a(k, j), (k == 2 && j == 3) ? 1.0 : 0.0, 1e-12);
}

TEST(CoeffsFromSamples, CosXyReferenceTable) {
  const auto a = coeffs_from_samples(sample_grid(cos_xy, 32), 15);
  for (const auto& e : kCosXyTable) EXPECT_NEAR(a(e.k, e.j), e.value, 1e-6);
  for (int k = 0; k <= 15; ++k)
    for (int j = 0; j <= 15; ++j)
      if (k % 2 || j % 2) EXPECT_LE(std::abs(a(k, j)), 1e-12);
}

TEST(CoeffsFromSamples, NyquistRowUsesHalfFactor) {
  // On m = 8 the degree-4 row is the Nyquist frequency.
  const auto f = [](double x, double y) { return cheb_trig(4, x) + 0.5 * cheb_trig(4, y); };
  const auto a = coeffs_from_samples(sample_grid(f, 8), 4);
  EXPECT_NEAR(a(4, 0), 1.0, 1e-14);
  EXPECT_NEAR(a(0, 4), 0.5, 1e-14);
  EXPECT_NEAR(a(0, 0), 0.0, 1e-14);
}

TEST(CoeffsFromSamples, RejectsDegreeAboveHalfGrid) {
  const auto g = sample_grid(cos_xy, 16);
  EXPECT_THROW(coeffs_from_samples(g, 9), InvalidInput);
  EXPECT_THROW(coeffs_from_samples(g, 0), InvalidInput);
}

// ---------------------------------------------------------------- builder

TEST(BuildAdaptive, ConstantCollapsesToSingleCoefficient) {
  const auto c = build_adaptive([](double, double) { return 3.5; });
  EXPECT_EQ(c.degree_x(), 0);
  EXPECT_EQ(c.degree_y(), 0);
  EXPECT_NEAR(c.coeffs()(0, 0), 3.5, 1e-15);
}

TEST(BuildAdaptive, CosXyCorner) {
  const auto c = build_adaptive(cos_xy);
  for (const auto& e : kCosXyTable) EXPECT_NEAR(c.coeffs()(e.k, e.j), e.value, 1e-6);
  for (double v : c.coeffs().data())
    EXPECT_TRUE(v == 0.0 || std::abs(v) >= 1e-15) << "untrimmed coefficient " << v;
  EXPECT_EQ(c.tol(), 1e-15);
}

TEST(BuildAdaptive, ExampleTwoRetainedBlock) {
  const auto c = build_adaptive(example2);
  EXPECT_GE(c.degree_x(), 25);
  EXPECT_LE(c.degree_x(), 70);
  EXPECT_GE(c.degree_y(), 25);
  EXPECT_LE(c.degree_y(), 70);
}

TEST(BuildAdaptive, NoConvergenceCarriesTail) {
  BuildOptions opts;
  opts.max_degree = 64;
  try {
    build_adaptive([](double x, double y) { return std::abs(x) + y; }, {}, opts);
    FAIL() << "expected NoConvergence";
  } catch (const NoConvergence& e) {
    EXPECT_EQ(e.last_degree(), 64);
    EXPECT_GT(e.tail(), 1e-15);
  }
}

TEST(BuildAdaptive, RelativeToleranceForLargeMagnitude) {
  const auto big = [](double x, double y) { return 1e6 * std::cos(x * y); };
  BuildOptions abs_opts;
  abs_opts.max_degree = 256;
  EXPECT_THROW(build_adaptive(big, {}, abs_opts), NoConvergence);

  BuildOptions rel_opts = abs_opts;
  rel_opts.relative_tol = true;
  const auto c = build_adaptive(big, {}, rel_opts);
  EXPECT_NEAR(c.tol(), 1e-15 * 1e6, 1e-20);
  EXPECT_NEAR(c(0.3, -0.4), 1e6 * std::cos(-0.12), 1e-8);
}

TEST(BuildAdaptive, OptionValidation) {
  BuildOptions bad;
  bad.tol = 0.0;
  EXPECT_THROW(build_adaptive(cos_xy, {}, bad), InvalidInput);
  bad = {};
  bad.initial_degree = 6;
  EXPECT_THROW(build_adaptive(cos_xy, {}, bad), InvalidInput);
  bad = {};
  bad.max_degree = 4;
  EXPECT_THROW(build_adaptive(cos_xy, {}, bad), InvalidInput);
}

TEST(BuildAdaptive, GeneralRectangle) {
  const Domain2 d{0.0, 2.0, 1.0, 3.0};
  const auto f = [](double x, double y) { return std::exp(x) * std::sin(y); };
  const auto c = build_adaptive(f, d);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ux(0.0, 2.0), uy(1.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double x = ux(rng), y = uy(rng);
    EXPECT_NEAR(c(x, y), f(x, y), 5e-14);
  }
}

// ------------------------------------------------------------------ trim

TEST(Trim, DropsBelowTolerance) {
  Matrix<double> a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 1e-20;
  a(1, 1) = 2;
  const auto s = trim(a, 1e-15);
  EXPECT_EQ(s.entries, (std::vector<SparseEntry>{{0, 0, 1.0}, {1, 1, 2.0}}));
  EXPECT_EQ(s.degree_x, 1);
  EXPECT_EQ(s.degree_y, 1);
}

TEST(Trim, AllZeroIsZeroFunction) {
  const auto s = trim(Matrix<double>(3, 4), 1e-15);
  EXPECT_TRUE(s.entries.empty());
  EXPECT_EQ(s.degree_x, 0);
  EXPECT_EQ(s.degree_y, 0);
  EXPECT_EQ(from_sparse(s)(0.2, 0.7), 0.0);
}

TEST(Trim, CosXyTablePattern) {
  // 1e-4 separates the nine displayed entries (smallest 6.03e-4) from the
  // next coefficients (about 2e-5).
  const auto s = trim(build_adaptive(cos_xy).coeffs(), 1e-4);
  ASSERT_EQ(s.entries.size(), 9u);
  for (const auto& e : s.entries) {
    EXPECT_EQ(e.row % 2, 0);
    EXPECT_EQ(e.col % 2, 0);
    EXPECT_LE(e.row, 4);
    EXPECT_LE(e.col, 4);
  }
  EXPECT_EQ(s.degree_x, 4);
  EXPECT_EQ(s.degree_y, 4);
}

// ------------------------------------------------------------- evaluation

TEST(Evaluate, Constant) {
  const Cheb2 c(Matrix<double>(1, 1, 2.75));
  for (double x : {-1.0, 0.1, 1.0}) {
    EXPECT_EQ(evaluate_matrix(c, x, -x), 2.75);
    EXPECT_EQ(evaluate_clenshaw(c, x, -x), 2.75);
  }
}

TEST(Evaluate, ChebyshevProduct) {
  const auto c = build_adaptive([](double x, double y) { return cheb_trig(2, x) * cheb_trig(3, y); });
  EXPECT_NEAR(evaluate_matrix(c, 0.3, -0.7), -0.59696, 1e-14);
  EXPECT_NEAR(evaluate_clenshaw(c, 0.3, -0.7), -0.59696, 1e-14);
}

TEST(Evaluate, BilinearTerm) {
  Matrix<double> a(2, 2);
  a(1, 1) = 1.0;
  const Cheb2 c(a);
  EXPECT_DOUBLE_EQ(evaluate_clenshaw(c, 0.5, 0.25), 0.125);
  EXPECT_DOUBLE_EQ(evaluate_matrix(c, 0.5, 0.25), 0.125);
}

TEST(Evaluate, TruncatedCosXyGridError) {
  const auto c = build_adaptive(cos_xy).truncated(4, 4);
  const double err = testing::max_grid_error(c, cos_xy, 0.0, 1.0, 50);
  EXPECT_NEAR(err, 0.000082141, 2e-5);
}

TEST(Evaluate, OutsideDomain) {
  const Cheb2 c(Matrix<double>(2, 2, 1.0), Domain2{0, 1, 0, 1});
  EXPECT_THROW(evaluate_matrix(c, 1.01, 0.5), DomainError);
  EXPECT_THROW(evaluate_clenshaw(c, 0.5, -0.1), DomainError);
  EXPECT_NO_THROW(evaluate_matrix(c, 1.0 + 1e-13, 0.5));
}

TEST(EvaluateProperty, MatrixFormEqualsClenshaw) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const Cheb2 c(testing::random_real(6, 5, rng));
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    const double a = evaluate_matrix(c, x, y);
    EXPECT_NEAR(evaluate_clenshaw(c, x, y), a, 1e-12 * std::max(1.0, std::abs(a)));
  }
  const auto big = build_adaptive(example2);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng), y = u(rng);
    const double a = evaluate_matrix(big, x, y);
    EXPECT_NEAR(evaluate_clenshaw(big, x, y), a, 1e-12 * std::max(1.0, std::abs(a)));
  }
}

// ------------------------------------------------------------- indicator

TEST(ParsevalIndicator, ExactPolynomialIsZero) {
  const auto f = [](double x, double y) { return x * y; };
  const auto c = build_adaptive(f);
  EXPECT_LE(std::abs(parseval_indicator(c, f)), 1e-12);
}

TEST(ParsevalIndicator, TruncatedCosXy) {
  const auto c = build_adaptive(cos_xy).truncated(4, 4);
  const double ind = parseval_indicator(c, cos_xy);
  EXPECT_GT(ind, 3.97247e-11);
  EXPECT_LT(ind, 3.97247e-9);
}

TEST(ParsevalIndicator, ExampleTwoFullApproximant) {
  const auto c = build_adaptive(example2);
  EXPECT_LE(std::abs(parseval_indicator(c, example2)), 1e-12);
}

// ---------------------------------------------------- quadrature oracle

TEST(CoeffsByQuadrature, Examples) {
  EXPECT_NEAR(coeffs_by_quadrature([](double, double) { return 1.0; }, 0, 0, 16), 1.0, 1e-12);
  EXPECT_NEAR(coeffs_by_quadrature([](double x, double) { return cheb_trig(3, x); }, 3, 0, 64),
              1.0, 1e-10);
  EXPECT_NEAR(coeffs_by_quadrature(cos_xy, 0, 0, 256), 0.880725579, 1e-8);
  EXPECT_THROW(coeffs_by_quadrature(cos_xy, 10, 0, 32), InvalidInput);
}

TEST(CoeffsProperty, FftPathMatchesQuadrature) {
  const std::vector<Function2> fs = {
      cos_xy,
      [](double x, double y) { return std::exp(x * y); },
      [](double x, double y) { return x * x * x * y * y; },
  };
  const int degree = 12;
  for (const auto& f : fs) {
    const auto a = coeffs_from_samples(sample_grid(f, 64), degree);
    for (int k = 0; k <= degree; k += 3)
      for (int j = 0; j <= degree; j += 2)
        EXPECT_NEAR(a(k, j), coeffs_by_quadrature(f, k, j, 512), 1e-8) << k << "," << j;
  }
}

// ---------------------------------------------------------- properties

TEST(BuildProperty, ExactReproductionOfPolynomials) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    const auto alpha = testing::random_real(5, 5, rng);
    const auto f = [&alpha](double x, double y) { return testing::series_value(alpha, x, y); };
    const auto c = build_adaptive(f);
    ASSERT_EQ(c.degree_x(), 4);
    ASSERT_EQ(c.degree_y(), 4);
    for (int k = 0; k < 5; ++k)
      for (int j = 0; j < 5; ++j) EXPECT_NEAR(c.coeffs()(k, j), alpha(k, j), 1e-12);
    for (int i = 0; i < 100; ++i) {
      const double x = u(rng), y = u(rng);
      EXPECT_NEAR(c(x, y), f(x, y), 1e-11);
    }
  }
}

TEST(BuildProperty, DecayBoundsHoldForCosXy) {
  // |d2/dx2 cos(xy)| = y^2 |cos(xy)| <= 1 on the unit square, same in y.
  const DecayBounds bounds{1.0, 1.0, 1.0};
  bounds.validate();
  const auto a = coeffs_from_samples(sample_grid(cos_xy, 128), 64);
  for (int n = 2; n <= 64; ++n) {
    EXPECT_LE(std::abs(a(n, 0)), bounds.row0(n)) << n;
    EXPECT_LE(std::abs(a(n, 1)), bounds.row1(n)) << n;
    EXPECT_LE(std::abs(a(0, n)), bounds.col0(n)) << n;
    EXPECT_LE(std::abs(a(1, n)), bounds.col1(n)) << n;
  }
  EXPECT_THROW(bounds.row0(1), DomainError);
  EXPECT_THROW((DecayBounds{-1.0, 0.0, 0.0}.validate()), ValidationError);
}

TEST(BuildProperty, DecayBoundsForSlowerFunction) {
  // f = sin(3x) cosh(2y): |f_xx| <= 9 cosh 2, |f_yy| <= 4 cosh 2.
  const auto f = [](double x, double y) { return std::sin(3 * x) * std::cosh(2 * y); };
  const DecayBounds bounds{9 * std::cosh(2.0), 4 * std::cosh(2.0), 6 * std::cosh(2.0)};
  const auto a = coeffs_from_samples(sample_grid(f, 128), 64);
  for (int n = 2; n <= 64; ++n) {
    EXPECT_LE(std::abs(a(n, 0)), bounds.row0(n));
    EXPECT_LE(std::abs(a(n, 1)), bounds.row1(n));
    EXPECT_LE(std::abs(a(0, n)), bounds.col0(n));
    EXPECT_LE(std::abs(a(1, n)), bounds.col1(n));
  }
}

TEST(BuildProperty, TruncationErrorNonIncreasing) {
  const auto full = build_adaptive(cos_xy);
  double previous = std::numeric_limits<double>::infinity();
  for (int n : {4, 8, 16}) {
    const auto c = full.truncated(n, n);
    const double err = testing::max_grid_error(c, cos_xy, -1.0, 1.0, 101);
    EXPECT_LE(err, previous + 1e-14) << n;
    previous = err;
  }
}

TEST(BuildProperty, LeastSquaresOptimality) {
  // Weighted L2 residual discretised by the 32-point Gauss-Chebyshev rule,
  // which is exact for the squared degree-4 residuals involved.
  std::mt19937_64 rng(31);
  const auto alpha = testing::random_real(5, 5, rng);
  const auto f = [&alpha](double x, double y) { return testing::series_value(alpha, x, y); };
  const auto c = build_adaptive(f);

  const int nodes = 32;
  auto residual = [&](const Cheb2& p) {
    double r = 0.0;
    for (int i = 0; i < nodes; ++i)
      for (int l = 0; l < nodes; ++l) {
        const double x = std::cos((i + 0.5) * std::numbers::pi / nodes);
        const double y = std::cos((l + 0.5) * std::numbers::pi / nodes);
        const double d = f(x, y) - p(x, y);
        r += d * d;
      }
    return r;
  };

  const double base = residual(c);
  for (int k = 0; k < 5; ++k)
    for (int j = 0; j < 5; ++j)
      for (double delta : {1e-3, -1e-3}) {
        Matrix<double> perturbed = c.coeffs();
        perturbed(k, j) += delta;
        EXPECT_GT(residual(Cheb2(perturbed)), base) << k << "," << j;
      }
}

TEST(Cheb2, ConstructorInvariants) {
  EXPECT_THROW(Cheb2(Matrix<double>()), ValidationError);
  EXPECT_THROW(Cheb2(Matrix<double>(1, 1, std::numeric_limits<double>::infinity())),
               ValidationError);
  EXPECT_THROW(Cheb2(Matrix<double>(1, 1), Domain2{}, -1.0), ValidationError);
  Matrix<double> a(2, 2, 1e-16);
  a(0, 0) = 1.0;
  const Cheb2 c(a, {}, 1e-15);
  EXPECT_EQ(c.coeffs()(1, 1), 0.0);
  EXPECT_EQ(c.compacted().degree_x(), 0);
}

TEST(Timing, CosXyBuildUnderOneSecond) {
  const auto start = std::chrono::steady_clock::now();
  const auto c = build_adaptive(cos_xy);
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  EXPECT_LT(dt.count(), 1.0);
  EXPECT_GT(c.degree_x(), 4);
}

}  // namespace
}  // namespace bicheb

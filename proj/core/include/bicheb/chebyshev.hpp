#pragma once

#include <span>
#include <vector>

namespace bicheb {

/// Arguments within this distance outside [-1, 1] are clamped instead of
/// rejected.
inline constexpr double kUnitOvershoot = 1e-12;

/// T_k(x) by the three-term recurrence. Throws DomainError for k < 0 or
/// |x| > 1 + kUnitOvershoot.
double cheb_t(int k, double x);

/// (T_0(x), ..., T_n(x)) in a single recurrence pass.
std::vector<double> cheb_vector(int n, double x);

/// Sum_k coeffs[k] T_k(x) by Clenshaw's backward recurrence. |x| <= 1 is
/// assumed, not checked.
double clenshaw(std::span<const double> coeffs, double x);

/// Node cos(2 pi k / m) of the periodic sampling grid, written as
/// sin(pi (m - 4k') / (2m)) with k' = min(k, m - k) so that node k and node
/// m - k are bitwise identical and the quarter-period node is exactly zero.
double periodic_node(int k, int m);

}  // namespace bicheb

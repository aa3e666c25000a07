#include "bicheb/domain.hpp"

#include <cmath>
#include <cstdio>

#include "bicheb/error.hpp"

namespace bicheb {

void Domain2::validate() const {
  const bool finite = std::isfinite(xlo) && std::isfinite(xhi) &&
                      std::isfinite(ylo) && std::isfinite(yhi);
  if (!finite || !(xlo < xhi) || !(ylo < yhi))
    throw ValidationError("invalid domain " + to_string() +
                          ": need finite bounds with xlo < xhi, ylo < yhi");
}

std::string Domain2::to_string() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "[%g, %g] x [%g, %g]", xlo, xhi, ylo, yhi);
  return buf;
}

}  // namespace bicheb

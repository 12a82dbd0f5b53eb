#include "splineqi/convergence.hpp"

#include <cmath>
#include <stdexcept>

namespace splineqi {

double fit_order(std::span<const int> ns, std::span<const double> errors) {
  if (ns.size() != errors.size()) throw std::domain_error("fit_order: size mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (errors[i] == 0.0 || !std::isfinite(errors[i])) continue;
    const double x = std::log(static_cast<double>(ns[i]));
    const double y = std::log(std::abs(errors[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++m;
  }
  if (m < 2) throw std::domain_error("fit_order: need at least two nonzero errors");
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  // error decreasing in n means a positive order in h
  return -slope;
}

}  // namespace splineqi

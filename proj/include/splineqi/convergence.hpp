#pragma once

#include <span>

namespace splineqi {

/// Observed order p in |error| ~ C h^p, fitted by least squares on
/// (log n, log |error|) pairs. Rows with a zero error are skipped.
double fit_order(std::span<const int> ns, std::span<const double> errors);

}  // namespace splineqi

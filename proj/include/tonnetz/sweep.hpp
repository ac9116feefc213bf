#ifndef TONNETZ_SWEEP_HPP
#define TONNETZ_SWEEP_HPP

#include <string>
#include <vector>

#include "tonnetz/shape.hpp"

namespace tonnetz {

/// The exhaustive cross-checks run on one shape: direct counts against the
/// chart, component count against the gcd, oracle classification against the
/// table, edge incidences against the 1/2/4 chart, boundary circuit counts
/// against the gcd formulas, and chi additivity over components. Returns an
/// empty string on success, otherwise a diagnostic.
std::string check_shape(const TriadShape& shape);

struct SweepFailure {
  TriadShape shape;
  std::string detail;
};

struct SweepReport {
  int max_scale = 0;
  int shapes_checked = 0;
  std::vector<SweepFailure> failures;  // sorted by shape

  bool ok() const { return failures.empty(); }
};

/// Run check_shape over every shape with N <= max_scale. The parallel path
/// and the serial reference produce identical reports; results are merged in
/// shape order either way.
SweepReport run_verification_sweep(int max_scale, bool parallel = true);

/// Mismatches of gcd(3n+k, n+k) against the closed form over the full grid
/// 1 <= n <= max_n, 1 <= k <= max_k.
int gcd_identity_mismatches(long long max_n, long long max_k);

}  // namespace tonnetz

#endif

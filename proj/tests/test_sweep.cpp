#include <doctest.h>

#include "tonnetz/sweep.hpp"

using namespace tonnetz;

TEST_CASE("serial and parallel sweeps produce identical reports") {
  const SweepReport serial = run_verification_sweep(20, false);
  const SweepReport parallel = run_verification_sweep(20, true);
  CHECK(serial.shapes_checked == parallel.shapes_checked);
  REQUIRE(serial.failures.size() == parallel.failures.size());
  for (std::size_t i = 0; i < serial.failures.size(); ++i) {
    CHECK(serial.failures[i].shape == parallel.failures[i].shape);
    CHECK(serial.failures[i].detail == parallel.failures[i].detail);
  }
}

TEST_CASE("the sweep is clean on small scales") {
  const SweepReport report = run_verification_sweep(36);
  CHECK(report.shapes_checked > 0);
  for (const SweepFailure& f : report.failures) {
    CAPTURE(f.shape.label());
    CAPTURE(f.detail);
    CHECK(false);
  }
}

TEST_CASE("sweep shape counts come from the partition enumeration") {
  CHECK(run_verification_sweep(12).shapes_checked == 53);
  CHECK(run_verification_sweep(3).shapes_checked == 1);
}

TEST_CASE("the gcd identity has no small counterexamples") {
  CHECK(gcd_identity_mismatches(60, 60) == 0);
}

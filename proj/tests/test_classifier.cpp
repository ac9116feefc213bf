#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "tonnetz/classifier.hpp"
#include "tonnetz/complex.hpp"
#include "tonnetz/errors.hpp"
#include "tonnetz/invariants.hpp"

using namespace tonnetz;

namespace {

SpaceKind kind_of(Topology t) { return SpaceKind::simple(t); }

// Independent restatement of the case table, evaluated on a coprime shape.
// Returns which single case applies; the test asserts exactly one does.
int matching_rows(const TriadShape& base, SpaceKind* kind_out) {
  const auto [n1, n2, n3] = base.intervals();
  const int n = base.scale_size();
  int rows = 0;
  SpaceKind kind = SpaceKind::simple(Topology::Torus);
  if (n1 == n2 && n2 == n3) {
    ++rows;
    kind = kind_of(Topology::TwoSimplex);
  }
  if (n1 == n2 && n2 < n3 && 2 * n3 == n) {
    ++rows;
    kind = kind_of(Topology::TetrahedronBoundary);
  }
  if (((n1 == n2 && n2 < n3 && 2 * n3 != n) || (n1 < n2 && n2 == n3)) && n % 2 == 0) {
    ++rows;
    kind = kind_of(Topology::Cylinder);
  }
  if (((n1 == n2 && n2 < n3 && 2 * n3 != n) || (n1 < n2 && n2 == n3)) && n % 2 == 1) {
    ++rows;
    kind = kind_of(Topology::MoebiusBand);
  }
  if (n1 < n2 && n1 + n2 == n3) {
    ++rows;
    kind = SpaceKind::circle_of_tetrahedra((n1 + n2) / std::gcd(n1, n2));
  }
  if (n1 < n2 && n2 < n3 && 2 * n3 != n) {
    ++rows;
    kind = kind_of(Topology::Torus);
  }
  if (kind_out) *kind_out = kind;
  return rows;
}

}  // namespace

TEST_CASE("closed-form classification of the flagship shapes") {
  const ClassificationRecord torus = classify_closed_form(TriadShape(3, 4, 5));
  CHECK(torus.num_components == 1);
  CHECK(torus.component_kind == kind_of(Topology::Torus));
  CHECK(torus.orientable == true);

  const ClassificationRecord circles = classify_closed_form(TriadShape(2, 4, 6));
  CHECK(circles.num_components == 2);
  CHECK(circles.component_kind == SpaceKind::circle_of_tetrahedra(3));

  const ClassificationRecord cylinder = classify_closed_form(TriadShape(2, 5, 5));
  CHECK(cylinder.num_components == 1);
  CHECK(cylinder.component_kind == kind_of(Topology::Cylinder));
  CHECK(cylinder.boundary_circuits == 2);

  const ClassificationRecord moebius = classify_closed_form(TriadShape(1, 3, 3));
  CHECK(moebius.num_components == 1);
  CHECK(moebius.component_kind == kind_of(Topology::MoebiusBand));
  CHECK(moebius.orientable == false);
  CHECK(moebius.boundary_circuits == 1);
}

TEST_CASE("parity is judged on the component scale, not the ambient one") {
  // N = 14 is even, but each component lives in a 7-note scale.
  const ClassificationRecord r = classify_closed_form(TriadShape(2, 2, 10));
  CHECK(r.num_components == 2);
  CHECK(r.component_kind == kind_of(Topology::MoebiusBand));

  const ClassificationRecord oracle = classify_by_oracle(build_complex(TriadShape(2, 2, 10)));
  CHECK(oracle.num_components == 2);
  CHECK(oracle.component_kind == kind_of(Topology::MoebiusBand));
}

TEST_CASE("oracle classification inspects the complex only") {
  CHECK(classify_by_oracle(build_complex(TriadShape(1, 2, 3))).component_kind ==
        SpaceKind::circle_of_tetrahedra(3));
  CHECK(classify_by_oracle(build_complex(TriadShape(1, 1, 2))).component_kind ==
        kind_of(Topology::TetrahedronBoundary));
  CHECK(classify_by_oracle(build_complex(TriadShape(1, 4, 7))).component_kind ==
        kind_of(Topology::Torus));
  CHECK(classify_by_oracle(build_complex(TriadShape(1, 1, 1))).component_kind ==
        kind_of(Topology::TwoSimplex));
}

TEST_CASE("oracle and table agree on every small shape") {
  for (const TriadShape& shape : tonnetz::all_shapes_up_to(30)) {
    const ClassificationRecord table = classify_closed_form(shape);
    const ClassificationRecord oracle = classify_by_oracle(build_complex(shape));
    REQUIRE(table.num_components == oracle.num_components);
    REQUIRE(table.component_kind == oracle.component_kind);
    REQUIRE(table.per_component_euler == oracle.per_component_euler);
    REQUIRE(table.orientable == oracle.orientable);
    REQUIRE(table.boundary_circuits == oracle.boundary_circuits);
  }
}

TEST_CASE("gcd lemma value against direct gcds") {
  CHECK(gcd_lemma_value(1, 1) == 2);
  CHECK(std::gcd(3 * 1 + 1, 1 + 1) == 2);
  CHECK(gcd_lemma_value(1, 2) == 1);
  CHECK(std::gcd(3 * 1 + 2, 1 + 2) == 1);
  CHECK(gcd_lemma_value(3, 1) == 2);
  CHECK(std::gcd(3 * 3 + 1, 3 + 1) == 2);
  CHECK_THROWS_AS(gcd_lemma_value(0, 1), std::invalid_argument);
}

TEST_CASE("circle length formula and its precondition") {
  CHECK(circle_length(TriadShape(1, 5, 6)) == 6);
  CHECK(circle_length(TriadShape(2, 4, 6)) == 3);
  CHECK(circle_length(TriadShape(1, 2, 3)) == 3);
  CHECK_THROWS_AS(circle_length(TriadShape(3, 4, 5)), std::invalid_argument);
  CHECK_THROWS_AS(circle_length(TriadShape(1, 1, 2)), std::invalid_argument);
}

TEST_CASE("exactly one case row matches every coprime shape") {
  for (const TriadShape& shape : tonnetz::all_shapes_up_to(200)) {
    const TriadShape base = decompose(shape).base;
    SpaceKind expected = SpaceKind::simple(Topology::Torus);
    REQUIRE(matching_rows(base, &expected) == 1);
    REQUIRE(classify_closed_form(shape).component_kind == expected);
  }
}

TEST_CASE("the torus fraction grows with the scale size") {
  double previous = -1.0;
  for (int n : {12, 24, 48, 96}) {
    int tori = 0;
    const auto shapes = tonnetz::all_shapes_with_scale(n);
    for (const TriadShape& shape : shapes) {
      if (classify_closed_form(shape).component_kind.topology == Topology::Torus) ++tori;
    }
    const double fraction = static_cast<double>(tori) / static_cast<double>(shapes.size());
    REQUIRE(fraction > previous);
    previous = fraction;
  }
  CHECK(previous > 0.8);
}

#include <doctest.h>

#include <stdexcept>

#include "test_oracles.hpp"
#include "tonnetz/complex.hpp"
#include "tonnetz/errors.hpp"

using namespace tonnetz;

namespace {

Simplex edge12(int a, int b) { return Simplex::of({a, b}, 12); }
Simplex face12(int a, int b, int c) { return Simplex::of({a, b, c}, 12); }

}  // namespace

TEST_CASE("simplices canonicalize to sorted distinct vertex sets") {
  CHECK(Simplex::of({7, 3, 0}, 12) == Simplex::of({0, 3, 7}, 12));
  CHECK(Simplex::of({7, 3, 0}, 12).vertices()[0].value() == 0);
  CHECK_THROWS_AS(Simplex::of({3, 3, 7}, 12), std::invalid_argument);
  CHECK_THROWS_AS(Simplex::of({}, 12), std::invalid_argument);
}

TEST_CASE("mixed-modulus arithmetic is rejected") {
  CHECK_THROWS_AS(PitchClass(0, 12).step_to(PitchClass(0, 6)), std::invalid_argument);
  CHECK_THROWS_AS(Simplex::edge(PitchClass(0, 12), PitchClass(3, 6)), std::invalid_argument);
}

TEST_CASE("C(3,4,5) has the classical Tonnetz counts") {
  const TonnetzComplex c = build_complex(TriadShape(3, 4, 5));
  CHECK(c.vertices.size() == 12);
  CHECK(c.edges.size() == 36);
  CHECK(c.faces.size() == 24);
  CHECK(c.faces.count(face12(0, 3, 7)) == 1);
  CHECK(c.faces.count(face12(0, 4, 7)) == 1);
}

TEST_CASE("C(1,1,2) is the tetrahedron boundary on four vertices") {
  const TonnetzComplex c = build_complex(TriadShape(1, 1, 2));
  CHECK(c.vertices.size() == 4);
  CHECK(c.edges.size() == 6);
  REQUIRE(c.faces.size() == 4);
  CHECK(c.faces.count(Simplex::of({0, 1, 2}, 4)) == 1);
  CHECK(c.faces.count(Simplex::of({0, 1, 3}, 4)) == 1);
  CHECK(c.faces.count(Simplex::of({0, 2, 3}, 4)) == 1);
  CHECK(c.faces.count(Simplex::of({1, 2, 3}, 4)) == 1);
}

TEST_CASE("C(4,4,4) is four disjoint triangles") {
  const TonnetzComplex c = build_complex(TriadShape(4, 4, 4));
  CHECK(c.vertices.size() == 12);
  CHECK(c.edges.size() == 12);
  CHECK(c.faces.size() == 4);
}

TEST_CASE("construction matches the brute-force orbit enumeration") {
  for (const TriadShape& shape : tonnetz::all_shapes_up_to(30)) {
    const TonnetzComplex c = build_complex(shape);
    REQUIRE(c.vertices.size() == static_cast<std::size_t>(shape.scale_size()));
    REQUIRE(test_oracles::as_triples(c.faces) == test_oracles::naive_faces(shape));
    REQUIRE(test_oracles::as_pairs(c.edges) == test_oracles::naive_edges(shape));
  }
}

TEST_CASE("every face boundary is present in the edge set") {
  for (const TriadShape& shape : tonnetz::all_shapes_up_to(30)) {
    const TonnetzComplex c = build_complex(shape);
    for (const Simplex& face : c.faces) {
      for (const Simplex& edge : face.boundary()) {
        REQUIRE(c.edges.count(edge) == 1);
      }
    }
  }
}

TEST_CASE("faces_containing_edge matches filtered enumeration") {
  const TonnetzComplex c345 = build_complex(TriadShape(3, 4, 5));
  const auto on_03 = faces_containing_edge(c345, edge12(0, 3));
  CHECK(test_oracles::as_triples(on_03) == test_oracles::naive_faces_on_edge(c345.shape, 0, 3));
  CHECK(on_03 == std::set<Simplex>{face12(0, 3, 7), face12(0, 3, 8)});

  const TonnetzComplex c123 = build_complex(TriadShape(1, 2, 3));
  CHECK(faces_containing_edge(c123, Simplex::of({0, 3}, 6)).size() == 4);

  const TonnetzComplex c1110 = build_complex(TriadShape(1, 1, 10));
  CHECK(faces_containing_edge(c1110, edge12(0, 10)).size() == 1);

  CHECK_THROWS_AS(faces_containing_edge(c345, edge12(0, 1)), std::out_of_range);
}

TEST_CASE("edge incidences follow the 1/2/4 chart") {
  for (const TriadShape& shape : tonnetz::all_shapes_up_to(24)) {
    const TonnetzComplex c = build_complex(shape);
    for (const auto& [edge, faces] : c.edge_to_faces) {
      REQUIRE(static_cast<int>(faces.size()) ==
              chart_incidence(shape, edge_length(shape, edge)));
    }
  }
}

TEST_CASE("triad types distinguish translations from inversions") {
  const TonnetzComplex c345 = build_complex(TriadShape(3, 4, 5));
  CHECK(triad_type(c345, face12(0, 3, 7)) == std::set<TriadTypeLabel>{TriadTypeLabel::I});
  CHECK(triad_type(c345, face12(0, 4, 7)) == std::set<TriadTypeLabel>{TriadTypeLabel::II});

  const TonnetzComplex c1110 = build_complex(TriadShape(1, 1, 10));
  CHECK(triad_type(c1110, face12(0, 1, 2)) ==
        std::set<TriadTypeLabel>{TriadTypeLabel::I, TriadTypeLabel::II});

  CHECK_THROWS_AS(triad_type(c345, face12(0, 1, 2)), std::out_of_range);
}

TEST_CASE("types coincide exactly when an interval repeats") {
  for (const TriadShape& shape : tonnetz::all_shapes_up_to(20)) {
    const TonnetzComplex c = build_complex(shape);
    const bool repeated = shape.n1() == shape.n2() || shape.n2() == shape.n3();
    for (const Simplex& face : c.faces) {
      REQUIRE((triad_type(c, face).size() == 2) == repeated);
    }
  }
}

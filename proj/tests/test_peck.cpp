#include <doctest.h>

#include <set>
#include <stdexcept>

#include "test_oracles.hpp"
#include "tonnetz/complex.hpp"
#include "tonnetz/peck.hpp"
#include "tonnetz/surface.hpp"

using namespace tonnetz;

namespace {

std::vector<PeckChoice> word(const std::string& w) { return parse_choices(w); }

std::vector<std::vector<PeckChoice>> all_words(int length) {
  std::vector<std::vector<PeckChoice>> out;
  for (int bits = 0; bits < (1 << length); ++bits) {
    std::vector<PeckChoice> choices(length, PeckChoice::S);
    for (int p = 0; p < length; ++p) {
      if (bits & (1 << p)) choices[p] = PeckChoice::F;
    }
    out.push_back(choices);
  }
  return out;
}

int f_count(const std::vector<PeckChoice>& choices) {
  int count = 0;
  for (PeckChoice c : choices) {
    if (c == PeckChoice::F) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("assemble validates its shape family and word length") {
  CHECK_THROWS_AS(assemble(TriadShape(1, 1, 2), word("SS")), std::invalid_argument);
  CHECK_THROWS_AS(assemble(TriadShape(3, 4, 5), word("SSS")), std::invalid_argument);
  CHECK_THROWS_AS(assemble(TriadShape(2, 4, 6), word("SSS")), std::invalid_argument);
  CHECK_THROWS_AS(assemble(TriadShape(1, 2, 3), word("SS")), std::invalid_argument);
  CHECK_THROWS_AS(parse_choices("SXF"), std::invalid_argument);
}

TEST_CASE("assemblies are closed chi=0 surfaces carrying the component's faces") {
  const TriadShape shape(1, 2, 3);
  const std::set<test_oracles::IntTriple> expected_faces = test_oracles::naive_faces(shape);
  for (const auto& choices : all_words(3)) {
    const PeckAssembly a = assemble(shape, choices);
    REQUIRE(a.surface.size() == 12);

    // Independent incidence audit on the raw face data.
    std::map<SurfaceEdgeKey, int> incidence;
    std::set<int> vertices;
    std::set<SurfaceEdgeKey> keys;
    std::set<test_oracles::IntTriple> face_triples;
    for (const SurfaceTriangle& t : a.surface) {
      for (int v : t.vertices) vertices.insert(v);
      for (const SurfaceEdgeKey& k : t.edges) {
        ++incidence[k];
        keys.insert(k);
      }
      std::array<int, 3> tri = t.vertices;
      std::sort(tri.begin(), tri.end());
      face_triples.insert(tri);
    }
    for (const auto& [key, count] : incidence) REQUIRE(count == 2);
    REQUIRE(static_cast<int>(vertices.size()) - static_cast<int>(keys.size()) +
                static_cast<int>(a.surface.size()) ==
            0);
    REQUIRE(face_triples == expected_faces);

    // Each tritone appears as exactly two parallel copies.
    int copies = 0;
    for (const SurfaceEdgeKey& k : keys) {
      if (k.copy != 0) ++copies;
    }
    REQUIRE(copies == 6);
    REQUIRE(is_closed_surface(a.surface));
  }
}

TEST_CASE("FSS builds the Klein bottle, SSS the torus") {
  CHECK(classify_assembly(assemble(TriadShape(1, 2, 3), word("FSS"))) ==
        ClosedSurfaceKind::KleinBottle);
  CHECK(classify_assembly(assemble(TriadShape(1, 2, 3), word("SSS"))) ==
        ClosedSurfaceKind::Torus);
}

TEST_CASE("half of the eight assemblies are tori, and F-parity decides") {
  int tori = 0;
  int klein = 0;
  for (const auto& choices : all_words(3)) {
    const ClosedSurfaceKind kind = classify_assembly(assemble(TriadShape(1, 2, 3), choices));
    const bool even_f = f_count(choices) % 2 == 0;
    REQUIRE((kind == ClosedSurfaceKind::Torus) == even_f);
    (kind == ClosedSurfaceKind::Torus ? tori : klein)++;
  }
  CHECK(tori == 4);
  CHECK(klein == 4);
}

TEST_CASE("parity rule holds for longer circles too") {
  for (const TriadShape& shape : {TriadShape(1, 3, 4), TriadShape(2, 3, 5)}) {
    const int length = shape.scale_size() / 2;
    int orientable_count = 0;
    for (const auto& choices : all_words(length)) {
      const PeckAssembly a = assemble(shape, choices);
      const bool torus = classify_assembly(a) == ClosedSurfaceKind::Torus;
      REQUIRE(torus == (f_count(choices) % 2 == 0));
      if (torus) ++orientable_count;
    }
    CHECK(orientable_count == (1 << (length - 1)));
  }
}

TEST_CASE("long circles: sampled words still close up and follow parity") {
  // Full 2^L sweeps stop at L = 8; longer circles get spot words.
  for (const TriadShape& shape :
       {TriadShape(2, 7, 9), TriadShape(1, 11, 12), TriadShape(3, 13, 16)}) {
    const int length = shape.scale_size() / 2;
    std::vector<std::vector<PeckChoice>> samples;
    samples.emplace_back(length, PeckChoice::S);
    samples.emplace_back(length, PeckChoice::F);
    std::vector<PeckChoice> one_flip(length, PeckChoice::S);
    one_flip[1] = PeckChoice::F;
    samples.push_back(one_flip);
    std::vector<PeckChoice> alternating(length, PeckChoice::S);
    for (int p = 0; p < length; p += 2) alternating[p] = PeckChoice::F;
    samples.push_back(alternating);
    for (const auto& choices : samples) {
      const PeckAssembly a = assemble(shape, choices);
      REQUIRE(a.surface.size() == static_cast<std::size_t>(4 * length));
      REQUIRE(is_closed_surface(a.surface));
      REQUIRE(euler_characteristic(a.surface) == 0);
      REQUIRE((classify_assembly(a) == ClosedSurfaceKind::Torus) ==
              (f_count(choices) % 2 == 0));
    }
  }
}

TEST_CASE("collapse identifies the tritone copies back to the complex") {
  const TriadShape shape(1, 2, 3);
  const TonnetzComplex reference = build_complex(shape);
  const TonnetzComplex first = collapse(assemble(shape, word("FSS")));
  CHECK(first.faces == reference.faces);
  CHECK(first.edges == reference.edges);
  CHECK(first.vertices == reference.vertices);

  for (const auto& choices : all_words(3)) {
    const TonnetzComplex collapsed = collapse(assemble(shape, choices));
    REQUIRE(collapsed.faces == first.faces);
    REQUIRE(collapsed.edges == first.edges);
  }

  // After collapsing, tritones are fourfold again.
  for (const auto& [edge, faces] : first.edge_to_faces) {
    const int len = edge_length(shape, edge);
    REQUIRE(static_cast<int>(faces.size()) == (2 * len == shape.scale_size() ? 4 : 2));
  }
}

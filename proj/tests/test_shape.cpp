#include <doctest.h>

#include <stdexcept>

#include "test_oracles.hpp"
#include "tonnetz/shape.hpp"

using tonnetz::TriadShape;
using tonnetz::normalize_shape;

TEST_CASE("normalize_shape sorts intervals and implies the scale size") {
  const TriadShape minor = normalize_shape(5, 3, 4);
  CHECK(minor == TriadShape(3, 4, 5));
  CHECK(minor.scale_size() == 12);

  const TriadShape tiny = normalize_shape(1, 1, 1);
  CHECK(tiny == TriadShape(1, 1, 1));
  CHECK(tiny.scale_size() == 3);

  const TriadShape chromatic = normalize_shape(10, 1, 1);
  CHECK(chromatic == TriadShape(1, 1, 10));
  CHECK(chromatic.scale_size() == 12);
}

TEST_CASE("normalize_shape rejects nonpositive intervals") {
  CHECK_THROWS_AS(normalize_shape(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(normalize_shape(3, -1, 4), std::invalid_argument);
}

TEST_CASE("TriadShape rejects unsorted intervals") {
  CHECK_THROWS_AS(TriadShape(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(TriadShape(1, 3, 2), std::invalid_argument);
}

TEST_CASE("ordering forces n1,n2 below N/2 and ties n3=n1+n2 to n3=N/2") {
  for (const TriadShape& s : tonnetz::all_shapes_up_to(200)) {
    const int n = s.scale_size();
    REQUIRE(2 * s.n1() < n);
    REQUIRE(2 * s.n2() < n);
    REQUIRE((s.n3() == s.n1() + s.n2()) == (2 * s.n3() == n));
    REQUIRE(s.has_tritone() == (2 * s.n3() == n));
  }
}

TEST_CASE("shape enumeration matches direct partition counting") {
  CHECK(tonnetz::all_shapes_with_scale(12).size() == 12);
  CHECK(tonnetz::all_shapes_with_scale(3).size() == 1);
  int total = 0;
  for (int n = 3; n <= 60; ++n) {
    const auto shapes = tonnetz::all_shapes_with_scale(n);
    CHECK(static_cast<int>(shapes.size()) == test_oracles::naive_shape_count(n));
    total += static_cast<int>(shapes.size());
  }
  CHECK(tonnetz::all_shapes_up_to(60).size() == static_cast<std::size_t>(total));
  // The N <= 12 prefix drives the verify examples.
  CHECK(tonnetz::all_shapes_up_to(12).size() == 53);
}

TEST_CASE("shape enumeration is lexicographic") {
  const auto shapes = tonnetz::all_shapes_with_scale(12);
  for (std::size_t i = 1; i < shapes.size(); ++i) {
    CHECK(shapes[i - 1] < shapes[i]);
  }
  CHECK(shapes.front() == TriadShape(1, 1, 10));
  CHECK(shapes.back() == TriadShape(4, 4, 4));
}

#ifndef TONNETZ_TESTS_TEST_ORACLES_HPP
#define TONNETZ_TESTS_TEST_ORACLES_HPP

// Brute-force enumerations used as independent oracles. These walk the
// definition directly with plain integer sets and stay away from the library
// construction path they are checking.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "tonnetz/shape.hpp"
#include "tonnetz/simplex.hpp"

namespace test_oracles {

using IntTriple = std::array<int, 3>;
using IntPair = std::array<int, 2>;

inline int reduce(int v, int n) {
  v %= n;
  return v < 0 ? v + n : v;
}

inline IntPair sorted_pair(int a, int b, int n) {
  a = reduce(a, n);
  b = reduce(b, n);
  if (a > b) std::swap(a, b);
  return {a, b};
}

inline IntTriple sorted_triple(int a, int b, int c, int n) {
  std::array<int, 3> t = {reduce(a, n), reduce(b, n), reduce(c, n)};
  std::sort(t.begin(), t.end());
  return t;
}

/// All translations and inversions of {0, n1, n1+n2}, deduplicated.
inline std::set<IntTriple> naive_faces(const tonnetz::TriadShape& shape) {
  const int n = shape.scale_size();
  std::set<IntTriple> faces;
  for (int k = 0; k < n; ++k) {
    faces.insert(sorted_triple(k, k + shape.n1(), k + shape.n1() + shape.n2(), n));
    faces.insert(sorted_triple(k, k - shape.n1(), k - shape.n1() - shape.n2(), n));
  }
  return faces;
}

/// All translations of {0,n1}, {0,n2}, {0,n3}, deduplicated.
inline std::set<IntPair> naive_edges(const tonnetz::TriadShape& shape) {
  const int n = shape.scale_size();
  std::set<IntPair> edges;
  for (int interval : shape.intervals()) {
    for (int k = 0; k < n; ++k) edges.insert(sorted_pair(k, k + interval, n));
  }
  return edges;
}

/// The faces of naive_faces containing both endpoints of an edge.
inline std::set<IntTriple> naive_faces_on_edge(const tonnetz::TriadShape& shape, int a, int b) {
  const int n = shape.scale_size();
  a = reduce(a, n);
  b = reduce(b, n);
  std::set<IntTriple> out;
  for (const IntTriple& f : naive_faces(shape)) {
    const bool has_a = f[0] == a || f[1] == a || f[2] == a;
    const bool has_b = f[0] == b || f[1] == b || f[2] == b;
    if (has_a && has_b) out.insert(f);
  }
  return out;
}

inline std::set<IntTriple> as_triples(const std::set<tonnetz::Simplex>& faces) {
  std::set<IntTriple> out;
  for (const tonnetz::Simplex& f : faces) {
    out.insert({f.vertices()[0].value(), f.vertices()[1].value(), f.vertices()[2].value()});
  }
  return out;
}

inline std::set<IntPair> as_pairs(const std::set<tonnetz::Simplex>& edges) {
  std::set<IntPair> out;
  for (const tonnetz::Simplex& e : edges) {
    out.insert({e.vertices()[0].value(), e.vertices()[1].value()});
  }
  return out;
}

/// Number of three-part partitions of scale, by direct enumeration.
inline int naive_shape_count(int scale) {
  int count = 0;
  for (int a = 1; a < scale; ++a) {
    for (int b = a; b < scale; ++b) {
      const int c = scale - a - b;
      if (c >= b) ++count;
    }
  }
  return count;
}

}  // namespace test_oracles

#endif

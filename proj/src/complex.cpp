#include "tonnetz/complex.hpp"

#include <stdexcept>

#include "tonnetz/errors.hpp"

namespace tonnetz {

namespace {

void index_edges(TonnetzComplex& complex) {
  complex.edge_to_faces.clear();
  for (const Simplex& face : complex.faces) {
    for (const Simplex& edge : face.boundary()) {
      complex.edge_to_faces[edge].insert(face);
    }
  }
  // Closure audit: every face boundary edge must be a stored edge, and every
  // stored edge must bound at least one face.
  for (const auto& [edge, faces] : complex.edge_to_faces) {
    if (!complex.edges.count(edge)) {
      throw ContractViolationError("complex: face boundary edge " + edge.label() +
                                   " missing from edge set");
    }
  }
  for (const Simplex& edge : complex.edges) {
    if (!complex.edge_to_faces.count(edge)) {
      throw ContractViolationError("complex: edge " + edge.label() + " bounds no face");
    }
  }
}

}  // namespace

TonnetzComplex build_complex(const TriadShape& shape) {
  const int n = shape.scale_size();
  TonnetzComplex complex{shape, {}, {}, {}, {}};

  for (int k = 0; k < n; ++k) complex.vertices.emplace(k, n);

  for (int interval : shape.intervals()) {
    for (int k = 0; k < n; ++k) {
      complex.edges.insert(Simplex::edge(PitchClass(k, n), PitchClass(k + interval, n)));
    }
  }

  // Type I: translations of {0, n1, n1+n2}; Type II: inversions. Repeated
  // intervals make some of these coincide; the set keeps one copy.
  for (int k = 0; k < n; ++k) {
    complex.faces.insert(Simplex::face(PitchClass(k, n), PitchClass(k + shape.n1(), n),
                                       PitchClass(k + shape.n1() + shape.n2(), n)));
    complex.faces.insert(Simplex::face(PitchClass(k, n), PitchClass(k - shape.n1(), n),
                                       PitchClass(k - shape.n1() - shape.n2(), n)));
  }

  index_edges(complex);
  return complex;
}

TonnetzComplex complex_from_faces(const TriadShape& shape, const std::set<Simplex>& faces) {
  TonnetzComplex complex{shape, {}, {}, faces, {}};
  const int n = shape.scale_size();
  for (int k = 0; k < n; ++k) complex.vertices.emplace(k, n);
  for (const Simplex& face : faces) {
    for (const Simplex& edge : face.boundary()) complex.edges.insert(edge);
  }
  index_edges(complex);
  return complex;
}

const std::set<Simplex>& faces_containing_edge(const TonnetzComplex& complex,
                                               const Simplex& edge) {
  auto it = complex.edge_to_faces.find(edge);
  if (it == complex.edge_to_faces.end()) {
    throw std::out_of_range("faces_containing_edge: edge " + edge.label() + " not in complex");
  }
  return it->second;
}

int edge_length(const TriadShape& shape, const Simplex& edge) {
  if (edge.dimension() != 1) {
    throw std::invalid_argument("edge_length: expected a 1-simplex");
  }
  const int n = shape.scale_size();
  const int d = edge.vertices()[0].step_to(edge.vertices()[1]);
  for (int interval : shape.intervals()) {
    if (d == interval || n - d == interval) return interval;
  }
  throw std::out_of_range("edge_length: edge " + edge.label() + " has no interval of C(" +
                          shape.label() + ")");
}

int chart_incidence(const TriadShape& shape, int len) {
  const auto [n1, n2, n3] = shape.intervals();
  int other1 = 0, other2 = 0;
  if (len == n1) {
    other1 = n2;
    other2 = n3;
  } else if (len == n2) {
    other1 = n1;
    other2 = n3;
  } else if (len == n3) {
    other1 = n1;
    other2 = n2;
  } else {
    throw std::invalid_argument("chart_incidence: length " + std::to_string(len) +
                                " is not an interval of C(" + shape.label() + ")");
  }
  const bool tritone = 2 * len == shape.scale_size();
  if (other1 == other2) return tritone ? 2 : 1;
  return tritone ? 4 : 2;
}

std::set<TriadTypeLabel> triad_type(const TonnetzComplex& complex, const Simplex& face) {
  if (!complex.faces.count(face)) {
    throw std::out_of_range("triad_type: face " + face.label() + " not in complex");
  }
  const auto& vs = face.vertices();
  // Cyclic gap sequence: Type I realizes (n1,n2,n3) clockwise in some
  // rotation, Type II realizes (n1,n3,n2).
  const int g0 = vs[0].step_to(vs[1]);
  const int g1 = vs[1].step_to(vs[2]);
  const int g2 = vs[2].step_to(vs[0]);
  const std::array<std::array<int, 3>, 3> rotations = {{{g0, g1, g2}, {g1, g2, g0}, {g2, g0, g1}}};
  const std::array<int, 3> type1 = {complex.shape.n1(), complex.shape.n2(), complex.shape.n3()};
  const std::array<int, 3> type2 = {complex.shape.n1(), complex.shape.n3(), complex.shape.n2()};
  std::set<TriadTypeLabel> out;
  for (const auto& rot : rotations) {
    if (rot == type1) out.insert(TriadTypeLabel::I);
    if (rot == type2) out.insert(TriadTypeLabel::II);
  }
  if (out.empty()) {
    throw ContractViolationError("triad_type: face " + face.label() + " matches neither type");
  }
  return out;
}

}  // namespace tonnetz

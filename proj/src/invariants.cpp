#include "tonnetz/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tonnetz/errors.hpp"

namespace tonnetz {

namespace {

// The chart formulas divide exactly on the rows where they apply; a remainder
// means the case analysis above them is wrong.
int exact_div(int value, int divisor) {
  if (value % divisor != 0) {
    throw ContractViolationError("closed form: " + std::to_string(value) +
                                 " is not divisible by " + std::to_string(divisor));
  }
  return value / divisor;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int count_edges_closed_form(const TriadShape& shape) {
  const auto [n1, n2, n3] = shape.intervals();
  const int n = shape.scale_size();
  const bool half = (n3 == n1 + n2);
  if (n1 == n2 && n2 == n3) return n;
  if (n1 < n2 && n2 == n3) return 2 * n;
  if (n1 == n2) return half ? exact_div(3 * n, 2) : 2 * n;
  return half ? exact_div(5 * n, 2) : 3 * n;
}

int count_faces_closed_form(const TriadShape& shape) {
  const auto [n1, n2, n3] = shape.intervals();
  const int n = shape.scale_size();
  if (n1 == n2 && n2 == n3) return exact_div(n, 3);
  if (n1 < n2 && n2 < n3) return 2 * n;
  return n;
}

int euler_closed_form(const TriadShape& shape) {
  const auto [n1, n2, n3] = shape.intervals();
  const int n = shape.scale_size();
  if (n1 == n2 && n2 == n3) return exact_div(n, 3);
  if (n3 == n1 + n2) return exact_div(n, 2);
  return 0;
}

CountSummary counts_closed_form(const TriadShape& shape) {
  CountSummary c;
  c.num_vertices = shape.scale_size();
  c.num_edges = count_edges_closed_form(shape);
  c.num_faces = count_faces_closed_form(shape);
  c.euler = c.num_vertices - c.num_edges + c.num_faces;
  if (c.euler != euler_closed_form(shape)) {
    throw ContractViolationError("closed form: chart rows disagree for C(" + shape.label() + ")");
  }
  return c;
}

CountSummary count_summary(const TonnetzComplex& complex) {
  CountSummary c;
  c.num_vertices = static_cast<int>(complex.vertices.size());
  c.num_edges = static_cast<int>(complex.edges.size());
  c.num_faces = static_cast<int>(complex.faces.size());
  c.euler = c.num_vertices - c.num_edges + c.num_faces;
  return c;
}

int ComponentPartition::block_of(const PitchClass& v) const {
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i) {
    if (blocks[i].count(v)) return i;
  }
  throw std::out_of_range("ComponentPartition: vertex " + std::to_string(v.value()) +
                          " not in any block");
}

ComponentPartition connected_components(const TonnetzComplex& complex) {
  const int n = complex.scale_size();
  DisjointSet dsu(n);
  for (const Simplex& edge : complex.edges) {
    dsu.unite(edge.vertices()[0].value(), edge.vertices()[1].value());
  }
  std::map<int, std::set<PitchClass>> by_root;
  for (int v = 0; v < n; ++v) by_root[dsu.find(v)].insert(PitchClass(v, n));
  ComponentPartition partition;
  for (auto& [root, block] : by_root) partition.blocks.push_back(std::move(block));
  std::sort(partition.blocks.begin(), partition.blocks.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  partition.count = static_cast<int>(partition.blocks.size());
  return partition;
}

Decomposition decompose(const TriadShape& shape) {
  const int d = shape.interval_gcd();
  return Decomposition{d, TriadShape(shape.n1() / d, shape.n2() / d, shape.n3() / d)};
}

VertexLink vertex_link(const TonnetzComplex& complex, const PitchClass& v) {
  if (!complex.vertices.count(v)) {
    throw std::out_of_range("vertex_link: vertex " + std::to_string(v.value()) +
                            " not in complex");
  }
  VertexLink link{v, {}, {}, LinkShape::Singular};
  for (const Simplex& face : complex.faces) {
    if (!face.contains(v)) continue;
    std::vector<PitchClass> rest;
    for (const PitchClass& w : face.vertices()) {
      if (w != v) rest.push_back(w);
    }
    link.link_vertices.insert(rest[0]);
    link.link_vertices.insert(rest[1]);
    link.link_edges.insert(Simplex::edge(rest[0], rest[1]));
  }

  // Degree analysis: all degree 2 and connected is a cycle; two endpoints of
  // degree 1 with the rest degree 2, connected, is a path.
  std::map<PitchClass, std::vector<PitchClass>> adjacency;
  for (const Simplex& e : link.link_edges) {
    adjacency[e.vertices()[0]].push_back(e.vertices()[1]);
    adjacency[e.vertices()[1]].push_back(e.vertices()[0]);
  }
  int degree_one = 0;
  bool degrees_ok = true;
  for (const auto& [w, nbrs] : adjacency) {
    if (nbrs.size() == 1) {
      ++degree_one;
    } else if (nbrs.size() != 2) {
      degrees_ok = false;
    }
  }
  std::set<PitchClass> seen;
  if (!link.link_vertices.empty()) {
    std::vector<PitchClass> stack{*link.link_vertices.begin()};
    seen.insert(stack.back());
    while (!stack.empty()) {
      const PitchClass w = stack.back();
      stack.pop_back();
      for (const PitchClass& x : adjacency[w]) {
        if (seen.insert(x).second) stack.push_back(x);
      }
    }
  }
  const bool connected = seen.size() == link.link_vertices.size();
  if (degrees_ok && connected && degree_one == 0 && !link.link_edges.empty()) {
    link.shape_tag = LinkShape::Cycle;
  } else if (degrees_ok && connected && degree_one == 2) {
    link.shape_tag = LinkShape::Path;
  } else {
    link.shape_tag = LinkShape::Singular;
  }
  return link;
}

std::vector<std::vector<Simplex>> boundary_circuits(const TonnetzComplex& complex) {
  std::set<Simplex> boundary;
  for (const auto& [edge, faces] : complex.edge_to_faces) {
    if (faces.size() > 2) {
      throw ContractViolationError("boundary_circuits: edge " + edge.label() + " lies in " +
                                   std::to_string(faces.size()) + " faces; not a surface");
    }
    if (faces.size() == 1) boundary.insert(edge);
  }
  if (boundary.empty()) {
    throw ContractViolationError(
        "boundary_circuits: closed surface, no boundary edges in C(" + complex.shape.label() +
        ")");
  }

  std::map<PitchClass, std::vector<Simplex>> at_vertex;
  for (const Simplex& e : boundary) {
    at_vertex[e.vertices()[0]].push_back(e);
    at_vertex[e.vertices()[1]].push_back(e);
  }
  for (const auto& [v, edges] : at_vertex) {
    if (edges.size() != 2) {
      throw ContractViolationError("boundary_circuits: vertex " + std::to_string(v.value()) +
                                   " meets " + std::to_string(edges.size()) +
                                   " boundary edges");
    }
  }

  std::vector<std::vector<Simplex>> circuits;
  std::set<Simplex> visited;
  for (const Simplex& start : boundary) {
    if (visited.count(start)) continue;
    std::vector<Simplex> circuit;
    Simplex edge = start;
    PitchClass at = start.vertices()[0];
    do {
      visited.insert(edge);
      circuit.push_back(edge);
      // Step to the far endpoint, then take the other boundary edge there.
      const PitchClass next =
          edge.vertices()[0] == at ? edge.vertices()[1] : edge.vertices()[0];
      const auto& pair = at_vertex.at(next);
      edge = pair[0] == edge ? pair[1] : pair[0];
      at = next;
    } while (edge != start);
    circuits.push_back(std::move(circuit));
  }
  return circuits;
}

std::vector<SurfaceTriangle> component_triangles(const TonnetzComplex& complex,
                                                 const std::set<PitchClass>& block) {
  std::vector<SurfaceTriangle> triangles;
  for (const Simplex& face : complex.faces) {
    if (!block.count(face.vertices()[0])) continue;
    SurfaceTriangle t;
    for (int i = 0; i < 3; ++i) t.vertices[i] = face.vertices()[i].value();
    for (int i = 0; i < 3; ++i) {
      t.edges[i] = SurfaceEdgeKey(t.vertices[i], t.vertices[(i + 1) % 3], 0);
    }
    triangles.push_back(t);
  }
  return triangles;
}

std::vector<bool> orientability(const TonnetzComplex& complex) {
  const ComponentPartition partition = connected_components(complex);
  std::vector<bool> result;
  result.reserve(partition.blocks.size());
  for (const auto& block : partition.blocks) {
    result.push_back(orientable(component_triangles(complex, block)));
  }
  return result;
}

bool length_order_orientation_consistent(const TonnetzComplex& complex) {
  const TriadShape& shape = complex.shape;
  if (!(shape.n1() < shape.n2() && shape.n2() < shape.n3()) || shape.has_tritone()) {
    throw std::invalid_argument(
        "length_order_orientation_consistent: needs n1 < n2 < n3 != N/2, got C(" +
        shape.label() + ")");
  }
  const int n = shape.scale_size();

  // A translation face {k, k+n1, k+n1+n2} walks clockwise from its basepoint;
  // an inversion face {k, k-n1, k-n1-n2} walks counterclockwise. Either way
  // the walk meets its edges in length order n1, n2, n3.
  std::map<Simplex, std::pair<PitchClass, PitchClass>> traversal;
  for (const Simplex& face : complex.faces) {
    bool found = false;
    for (const PitchClass& k : face.vertices()) {
      for (int sign : {+1, -1}) {
        const PitchClass second = k + sign * shape.n1();
        const PitchClass third = second + sign * shape.n2();
        if (face == Simplex::face(k, second, third)) {
          const std::array<PitchClass, 3> walk = {k, second, third};
          for (int s = 0; s < 3; ++s) {
            const PitchClass& from = walk[s];
            const PitchClass& to = walk[(s + 1) % 3];
            const Simplex edge = Simplex::edge(from, to);
            auto [it, inserted] = traversal.emplace(edge, std::make_pair(from, to));
            // The partner face must run the shared edge backwards.
            if (!inserted && (it->second.first != to || it->second.second != from)) {
              return false;
            }
          }
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      throw ContractViolationError("length-order walk: face " + face.label() +
                                   " has no basepoint");
    }
  }
  return true;
}

}  // namespace tonnetz

#include "tonnetz/classifier.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tonnetz/errors.hpp"

namespace tonnetz {

namespace {

std::optional<bool> kind_orientable(const SpaceKind& kind) {
  switch (kind.topology) {
    case Topology::TwoSimplex:
    case Topology::TetrahedronBoundary:
    case Topology::Torus:
    case Topology::Cylinder:
      return true;
    case Topology::MoebiusBand:
      return false;
    case Topology::CircleOfTetrahedra:
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<int> kind_boundary_circuits(const SpaceKind& kind) {
  switch (kind.topology) {
    case Topology::TwoSimplex:
      return 1;
    case Topology::Cylinder:
      return 2;
    case Topology::MoebiusBand:
      return 1;
    case Topology::TetrahedronBoundary:
    case Topology::Torus:
      return 0;
    case Topology::CircleOfTetrahedra:
      return std::nullopt;
  }
  return std::nullopt;
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

/// Oracle for one component. `block` is its vertex set.
SpaceKind classify_component(const TonnetzComplex& complex, const std::set<PitchClass>& block);

}  // namespace

SpaceKind SpaceKind::simple(Topology t) {
  if (t == Topology::CircleOfTetrahedra) {
    throw std::invalid_argument("SpaceKind: circle of tetrahedra needs a length");
  }
  return SpaceKind{t, 0};
}

SpaceKind SpaceKind::circle_of_tetrahedra(int length) {
  if (length < 2) {
    throw std::invalid_argument("SpaceKind: circle length must be at least 2, got " +
                                std::to_string(length));
  }
  return SpaceKind{Topology::CircleOfTetrahedra, length};
}

std::string SpaceKind::token() const {
  switch (topology) {
    case Topology::TwoSimplex:
      return "2-simplex";
    case Topology::TetrahedronBoundary:
      return "tetrahedron-boundary";
    case Topology::Torus:
      return "torus";
    case Topology::Cylinder:
      return "cylinder";
    case Topology::MoebiusBand:
      return "moebius-band";
    case Topology::CircleOfTetrahedra:
      return "circle-of-tetrahedra(" + std::to_string(circle_length) + ")";
  }
  return "unknown";
}

ClassificationRecord classify_closed_form(const TriadShape& shape) {
  const Decomposition dec = decompose(shape);
  const TriadShape& base = dec.base;
  const auto [m1, m2, m3] = base.intervals();
  const int base_scale = base.scale_size();

  SpaceKind kind = SpaceKind::simple(Topology::Torus);
  if (m1 == m2 && m2 == m3) {
    kind = SpaceKind::simple(Topology::TwoSimplex);
  } else if (m1 == m2 && 2 * m3 == base_scale) {
    kind = SpaceKind::simple(Topology::TetrahedronBoundary);
  } else if (m1 < m2 && m1 + m2 == m3) {
    kind = SpaceKind::circle_of_tetrahedra(circle_length(shape));
  } else if (m1 == m2 || m2 == m3) {
    // Harmonic strip: the parity of the component's own scale size decides.
    kind = SpaceKind::simple(base_scale % 2 == 0 ? Topology::Cylinder : Topology::MoebiusBand);
  } else {
    kind = SpaceKind::simple(Topology::Torus);
  }

  ClassificationRecord record{shape,
                              dec.copies,
                              kind,
                              counts_closed_form(shape),
                              0,
                              kind_orientable(kind),
                              kind_boundary_circuits(kind),
                              ClassificationSource::ClosedForm};
  if (record.counts.euler % record.num_components != 0) {
    throw ContractViolationError("classify_closed_form: chi not divisible by component count");
  }
  record.per_component_euler = record.counts.euler / record.num_components;
  return record;
}

namespace {

SpaceKind classify_circle_component(const TonnetzComplex& complex,
                                    const std::vector<Simplex>& faces,
                                    const std::map<Simplex, int>& incidence) {
  // Group faces into tetrahedron blocks: faces joined through an edge of
  // incidence two belong to the same block.
  std::map<Simplex, int> face_index;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) face_index[faces[i]] = i;
  DisjointSet dsu(static_cast<int>(faces.size()));
  std::vector<Simplex> junctions;
  for (const auto& [edge, count] : incidence) {
    if (count == 1) {
      throw UnclassifiableError("oracle: boundary edge next to a fourfold edge in C(" +
                                complex.shape.label() + ")");
    }
    const auto& around = complex.edge_to_faces.at(edge);
    if (count == 2) {
      auto it = around.begin();
      const int a = face_index.at(*it++);
      const int b = face_index.at(*it);
      dsu.unite(a, b);
    } else if (count == 4) {
      junctions.push_back(edge);
    } else {
      throw UnclassifiableError("oracle: edge " + edge.label() + " lies in " +
                                std::to_string(count) + " faces");
    }
  }

  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) blocks[dsu.find(i)].push_back(i);

  // Each block must be a full tetrahedron boundary: four faces on four
  // vertices, covering every 3-subset.
  std::map<int, int> block_id;
  int next_id = 0;
  for (const auto& [root, members] : blocks) block_id[root] = next_id++;
  for (const auto& [root, members] : blocks) {
    if (members.size() != 4) {
      throw UnclassifiableError("oracle: glued block with " + std::to_string(members.size()) +
                                " faces in C(" + complex.shape.label() + ")");
    }
    std::set<PitchClass> support;
    for (int i : members) {
      const auto& vs = faces[i].vertices();
      support.insert(vs.begin(), vs.end());
    }
    if (support.size() != 4) {
      throw UnclassifiableError("oracle: block support is not four vertices");
    }
    std::set<Simplex> expected;
    const std::vector<PitchClass> sup(support.begin(), support.end());
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<PitchClass> tri;
      for (int i = 0; i < 4; ++i) {
        if (i != skip) tri.push_back(sup[i]);
      }
      expected.insert(Simplex(tri));
    }
    for (int i : members) {
      if (!expected.count(faces[i])) {
        throw UnclassifiableError("oracle: block is not a tetrahedron boundary");
      }
    }
  }

  // The blocks must close into a single cycle along the fourfold edges.
  std::map<int, int> junction_degree;
  std::map<int, std::vector<int>> block_adjacency;
  for (const Simplex& junction : junctions) {
    std::set<int> touched;
    for (const Simplex& f : complex.edge_to_faces.at(junction)) {
      touched.insert(block_id.at(dsu.find(face_index.at(f))));
    }
    if (touched.size() != 2) {
      throw UnclassifiableError("oracle: fourfold edge " + junction.label() +
                                " does not join two blocks");
    }
    auto it = touched.begin();
    const int a = *it++;
    const int b = *it;
    block_adjacency[a].push_back(b);
    block_adjacency[b].push_back(a);
    ++junction_degree[a];
    ++junction_degree[b];
  }
  const int block_count = static_cast<int>(blocks.size());
  if (static_cast<int>(junctions.size()) != block_count) {
    throw UnclassifiableError("oracle: junction count differs from block count");
  }
  for (const auto& [id, degree] : junction_degree) {
    if (degree != 2) {
      throw UnclassifiableError("oracle: block meets " + std::to_string(degree) + " junctions");
    }
  }
  std::set<int> seen{0};
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int b = stack.back();
    stack.pop_back();
    for (int other : block_adjacency[b]) {
      if (seen.insert(other).second) stack.push_back(other);
    }
  }
  if (static_cast<int>(seen.size()) != block_count) {
    throw UnclassifiableError("oracle: tetrahedron blocks do not form one cycle");
  }
  return SpaceKind::circle_of_tetrahedra(block_count);
}

SpaceKind classify_component(const TonnetzComplex& complex, const std::set<PitchClass>& block) {
  std::vector<Simplex> faces;
  std::map<Simplex, int> incidence;
  std::set<Simplex> edges;
  for (const Simplex& face : complex.faces) {
    if (block.count(face.vertices()[0])) faces.push_back(face);
  }
  for (const Simplex& face : faces) {
    for (const Simplex& edge : face.boundary()) edges.insert(edge);
  }
  int max_incidence = 0;
  int min_incidence = 4;
  for (const Simplex& edge : edges) {
    const int count = static_cast<int>(complex.edge_to_faces.at(edge).size());
    incidence[edge] = count;
    max_incidence = std::max(max_incidence, count);
    min_incidence = std::min(min_incidence, count);
  }

  if (max_incidence > 2) {
    return classify_circle_component(complex, faces, incidence);
  }

  const auto triangles = component_triangles(complex, block);
  const bool component_orientable = orientable(triangles);

  if (min_incidence == 1) {
    if (faces.size() == 1) return SpaceKind::simple(Topology::TwoSimplex);
    // Count the boundary circuits that stay inside this block.
    int circuits_here = 0;
    for (const auto& circuit : boundary_circuits(complex)) {
      if (block.count(circuit.front().vertices()[0])) ++circuits_here;
    }
    if (circuits_here == 2 && component_orientable) {
      return SpaceKind::simple(Topology::Cylinder);
    }
    if (circuits_here == 1 && !component_orientable) {
      return SpaceKind::simple(Topology::MoebiusBand);
    }
    throw UnclassifiableError("oracle: " + std::to_string(circuits_here) +
                              " boundary circuits with orientable=" +
                              std::to_string(component_orientable) + " in C(" +
                              complex.shape.label() + ")");
  }

  // Closed case: all edges in exactly two faces. Links must be cycles.
  for (const PitchClass& v : block) {
    if (vertex_link(complex, v).shape_tag != LinkShape::Cycle) {
      throw UnclassifiableError("oracle: closed component with a non-cycle link in C(" +
                                complex.shape.label() + ")");
    }
  }
  const int chi = static_cast<int>(block.size()) - static_cast<int>(edges.size()) +
                  static_cast<int>(faces.size());
  if (chi == 2) return SpaceKind::simple(Topology::TetrahedronBoundary);
  if (chi == 0 && component_orientable) return SpaceKind::simple(Topology::Torus);
  throw UnclassifiableError("oracle: closed component with chi=" + std::to_string(chi) +
                            ", orientable=" + std::to_string(component_orientable));
}

}  // namespace

ClassificationRecord classify_by_oracle(const TonnetzComplex& complex) {
  const ComponentPartition partition = connected_components(complex);
  std::optional<SpaceKind> kind;
  for (const auto& block : partition.blocks) {
    const SpaceKind k = classify_component(complex, block);
    if (kind && *kind != k) {
      throw UnclassifiableError("oracle: components of C(" + complex.shape.label() +
                                ") have different kinds");
    }
    kind = k;
  }

  ClassificationRecord record{complex.shape,
                              partition.count,
                              *kind,
                              count_summary(complex),
                              0,
                              kind_orientable(*kind),
                              kind_boundary_circuits(*kind),
                              ClassificationSource::Oracle};
  if (record.counts.euler % record.num_components != 0) {
    throw UnclassifiableError("oracle: chi not divisible by component count");
  }
  record.per_component_euler = record.counts.euler / record.num_components;
  return record;
}

long long gcd_lemma_value(long long n, long long k) {
  if (n < 1 || k < 1) {
    throw std::invalid_argument("gcd_lemma_value: arguments must be positive");
  }
  const long long g = std::gcd(n, k);
  const long long n0 = n / g;
  const long long k0 = k / g;
  return (n0 % 2 == 1 && k0 % 2 == 1) ? 2 * g : g;
}

int circle_length(const TriadShape& shape) {
  if (!(shape.n1() < shape.n2() && shape.n1() + shape.n2() == shape.n3())) {
    throw std::invalid_argument("circle_length: C(" + shape.label() +
                                ") is not a circle-of-tetrahedra shape");
  }
  return (shape.n1() + shape.n2()) / std::gcd(shape.n1(), shape.n2());
}

}  // namespace tonnetz

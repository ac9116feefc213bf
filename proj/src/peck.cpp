#include "tonnetz/peck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "tonnetz/errors.hpp"

namespace tonnetz {

std::vector<PeckChoice> parse_choices(const std::string& word) {
  std::vector<PeckChoice> choices;
  choices.reserve(word.size());
  for (char c : word) {
    if (c == 'S' || c == 's') {
      choices.push_back(PeckChoice::S);
    } else if (c == 'F' || c == 'f') {
      choices.push_back(PeckChoice::F);
    } else {
      throw std::invalid_argument(std::string("parse_choices: expected S or F, got '") + c + "'");
    }
  }
  return choices;
}

std::string choices_label(const std::vector<PeckChoice>& choices) {
  std::string out;
  for (PeckChoice c : choices) out += (c == PeckChoice::S ? 'S' : 'F');
  return out;
}

namespace {

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

void validate_circle_shape(const TriadShape& shape) {
  if (!(shape.n1() < shape.n2() && shape.n1() + shape.n2() == shape.n3())) {
    throw std::invalid_argument("assemble: C(" + shape.label() +
                                ") is not a circle-of-tetrahedra shape");
  }
  if (std::gcd(shape.n1(), shape.n2()) != 1) {
    throw std::invalid_argument("assemble: expected one circle, but C(" + shape.label() +
                                ") splits into disjoint copies");
  }
}

}  // namespace

PeckAssembly assemble(const TriadShape& shape, const std::vector<PeckChoice>& choices) {
  validate_circle_shape(shape);
  const int n = shape.scale_size();
  const int half = n / 2;  // circle length L and tritone span
  if (static_cast<int>(choices.size()) != half) {
    throw std::invalid_argument("assemble: need " + std::to_string(half) +
                                " choices for C(" + shape.label() + "), got " +
                                std::to_string(choices.size()));
  }

  const TonnetzComplex complex = build_complex(shape);
  std::vector<Simplex> faces(complex.faces.begin(), complex.faces.end());
  const int face_count = static_cast<int>(faces.size());
  std::map<Simplex, int> face_index;
  for (int i = 0; i < face_count; ++i) face_index[faces[i]] = i;

  // Each face holds exactly one tritone edge. Record its junction (the
  // tritone index mod L) and which half of the circle the third note is in.
  std::vector<int> junction_of(face_count, -1);
  std::vector<bool> in_lower_half(face_count, false);
  for (int i = 0; i < face_count; ++i) {
    for (const Simplex& edge : faces[i].boundary()) {
      if (2 * edge_length(shape, edge) != n) continue;
      if (junction_of[i] != -1) {
        throw ContractViolationError("assemble: face with two tritones");
      }
      const int m = edge.vertices()[0].value() % half;
      junction_of[i] = m;
      PitchClass third = faces[i].vertices()[0];
      for (const PitchClass& v : faces[i].vertices()) {
        if (!edge.contains(v)) third = v;
      }
      const int rel = PitchClass(m, n).step_to(third);
      in_lower_half[i] = rel < half;
    }
    if (junction_of[i] == -1) {
      throw ContractViolationError("assemble: face without a tritone");
    }
  }

  // Tetrahedron blocks: faces glued through their twofold (non-tritone)
  // edges.
  DisjointSet blocks(face_count);
  for (const auto& [edge, incident] : complex.edge_to_faces) {
    if (incident.size() == 2) {
      auto it = incident.begin();
      const int a = face_index.at(*it++);
      blocks.unite(a, face_index.at(*it));
    }
  }

  // Junction p of the word is the tritone reached after p steps of +n1
  // around the circle of tetrahedra.
  std::vector<PeckChoice> choice_at(half, PeckChoice::S);
  for (int p = 0; p < half; ++p) {
    choice_at[(p * shape.n1()) % half] = choices[p];
  }

  // Pair the four faces at each junction into the two edge copies.
  std::vector<int> copy_of(face_count, 0);
  for (int m = 0; m < half; ++m) {
    std::vector<int> at_junction;
    for (int i = 0; i < face_count; ++i) {
      if (junction_of[i] == m) at_junction.push_back(i);
    }
    if (at_junction.size() != 4) {
      throw ContractViolationError("assemble: junction with " +
                                   std::to_string(at_junction.size()) + " faces");
    }
    std::map<int, std::vector<int>> by_block;
    for (int i : at_junction) by_block[blocks.find(i)].push_back(i);
    if (by_block.size() != 2) {
      throw ContractViolationError("assemble: junction does not join two blocks");
    }
    auto block_it = by_block.begin();
    const std::vector<int>& first = block_it->second;
    const std::vector<int>& second = (++block_it)->second;
    auto half_face = [&](const std::vector<int>& pair, bool lower) {
      if (pair.size() != 2 || in_lower_half[pair[0]] == in_lower_half[pair[1]]) {
        throw ContractViolationError("assemble: junction block without one face per half");
      }
      return in_lower_half[pair[0]] == lower ? pair[0] : pair[1];
    };
    // S glues same-half faces of the two blocks, F glues across the halves.
    const bool same_half = choice_at[m] == PeckChoice::S;
    copy_of[half_face(first, true)] = 1;
    copy_of[half_face(second, same_half)] = 1;
    copy_of[half_face(first, false)] = 2;
    copy_of[half_face(second, !same_half)] = 2;
  }

  PeckAssembly assembly{shape, choices, {}};
  assembly.surface.reserve(face_count);
  for (int i = 0; i < face_count; ++i) {
    SurfaceTriangle t;
    const auto& vs = faces[i].vertices();
    for (int s = 0; s < 3; ++s) t.vertices[s] = vs[s].value();
    for (int s = 0; s < 3; ++s) {
      const int a = t.vertices[s];
      const int b = t.vertices[(s + 1) % 3];
      const int gap = PitchClass(a, n).step_to(PitchClass(b, n));
      const bool tritone = gap == half;
      t.edges[s] = SurfaceEdgeKey(a, b, tritone ? copy_of[i] : 0);
    }
    assembly.surface.push_back(t);
  }

  if (!is_closed_surface(assembly.surface) || euler_characteristic(assembly.surface) != 0) {
    throw ContractViolationError("assemble: result is not a closed chi=0 surface");
  }
  return assembly;
}

ClosedSurfaceKind classify_assembly(const PeckAssembly& assembly) {
  return orientable(assembly.surface) ? ClosedSurfaceKind::Torus : ClosedSurfaceKind::KleinBottle;
}

TonnetzComplex collapse(const PeckAssembly& assembly) {
  const int n = assembly.base_shape.scale_size();
  std::set<Simplex> faces;
  for (const SurfaceTriangle& t : assembly.surface) {
    faces.insert(Simplex::of({t.vertices[0], t.vertices[1], t.vertices[2]}, n));
  }
  return complex_from_faces(assembly.base_shape, faces);
}

}  // namespace tonnetz

#ifndef TONNETZ_SURFACE_HPP
#define TONNETZ_SURFACE_HPP

#include <array>
#include <compare>
#include <map>
#include <vector>

namespace tonnetz {

/// Identity of an edge in a triangulated surface. `copy` distinguishes
/// parallel edges with the same endpoints (the desingularized tritone pairs);
/// ordinary simplicial edges use copy 0.
struct SurfaceEdgeKey {
  int u = 0;
  int v = 0;
  int copy = 0;

  SurfaceEdgeKey() = default;
  SurfaceEdgeKey(int a, int b, int c) : u(a < b ? a : b), v(a < b ? b : a), copy(c) {}

  friend auto operator<=>(const SurfaceEdgeKey&, const SurfaceEdgeKey&) = default;
};

/// A triangle with labelled vertices and explicit edge identities.
/// edges[i] is the identity of the side joining vertices[i] and
/// vertices[(i+1) % 3].
struct SurfaceTriangle {
  std::array<int, 3> vertices{};
  std::array<SurfaceEdgeKey, 3> edges{};
};

std::map<SurfaceEdgeKey, std::vector<int>> edge_incidence(
    const std::vector<SurfaceTriangle>& faces);

/// V - E + F over distinct vertex labels and distinct edge keys.
int euler_characteristic(const std::vector<SurfaceTriangle>& faces);

/// Orientation propagation: assign each face a sign, demand that the two
/// faces on every edge traverse it in opposite directions, report whether a
/// globally consistent assignment exists. Works across multiple components.
/// Throws NotASurfaceError if any edge lies in more than two faces.
bool orientable(const std::vector<SurfaceTriangle>& faces);

/// True when every edge lies in exactly two faces and the faces around every
/// vertex close into a single cycle — the closed-surface conditions.
bool is_closed_surface(const std::vector<SurfaceTriangle>& faces);

/// Number of connected components of the face-adjacency graph (faces joined
/// when they share an edge key).
int face_component_count(const std::vector<SurfaceTriangle>& faces);

}  // namespace tonnetz

#endif

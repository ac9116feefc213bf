#ifndef TONNETZ_INVARIANTS_HPP
#define TONNETZ_INVARIANTS_HPP

#include <set>
#include <vector>

#include "tonnetz/complex.hpp"
#include "tonnetz/shape.hpp"
#include "tonnetz/simplex.hpp"
#include "tonnetz/surface.hpp"

namespace tonnetz {

struct CountSummary {
  int num_vertices = 0;
  int num_edges = 0;
  int num_faces = 0;
  int euler = 0;

  friend auto operator<=>(const CountSummary&, const CountSummary&) = default;
};

/// |E| by the six-case chart: 3N, 5N/2, 2N, 3N/2, 2N, or N.
int count_edges_closed_form(const TriadShape& shape);

/// |F|: N/3 if all intervals equal, 2N if all distinct, N otherwise.
int count_faces_closed_form(const TriadShape& shape);

/// chi by the chart: 0, N/2, or N/3 depending on the case.
int euler_closed_form(const TriadShape& shape);

/// Chart values bundled, for comparison against direct counts.
CountSummary counts_closed_form(const TriadShape& shape);

/// Direct cardinalities of the stored simplex sets.
CountSummary count_summary(const TonnetzComplex& complex);

/// Vertex sets of the connected components, ordered by smallest member.
struct ComponentPartition {
  std::vector<std::set<PitchClass>> blocks;
  int count = 0;

  /// Index of the block containing v; throws std::out_of_range otherwise.
  int block_of(const PitchClass& v) const;
};

ComponentPartition connected_components(const TonnetzComplex& complex);

/// C(d*m1, d*m2, d*m3) splits into d copies of C(m1,m2,m3), one per coset of
/// <d> in Z/N.
struct Decomposition {
  int copies = 1;
  TriadShape base;
};

Decomposition decompose(const TriadShape& shape);

enum class LinkShape { Cycle, Path, Singular };

/// The graph of neighbours of one vertex: one edge {b,c} per incident face
/// {v,b,c}. A cycle marks an interior surface point, a path a boundary point,
/// anything else a singular point.
struct VertexLink {
  PitchClass center;
  std::set<PitchClass> link_vertices;
  std::set<Simplex> link_edges;
  LinkShape shape_tag = LinkShape::Singular;
};

VertexLink vertex_link(const TonnetzComplex& complex, const PitchClass& v);

/// Partition the boundary edges (those in exactly one face) into closed
/// circuits. Requires a surface with boundary; throws ContractViolationError
/// on a closed surface, a non-surface, or a malformed boundary.
std::vector<std::vector<Simplex>> boundary_circuits(const TonnetzComplex& complex);

/// Orientability per connected component, aligned with the block order of
/// connected_components. Throws NotASurfaceError when an edge lies in more
/// than two faces.
std::vector<bool> orientability(const TonnetzComplex& complex);

/// Independent orientation route for shapes with n1 < n2 < n3 != N/2: walk
/// every face with its edges in increasing length order and check that the
/// two faces on each edge traverse it in opposite directions. Always true for
/// these shapes; exists as a cross-check on the propagation route. Throws
/// std::invalid_argument outside that case.
bool length_order_orientation_consistent(const TonnetzComplex& complex);

/// The faces of one component as labelled triangles (edge keys carry copy 0),
/// ready for the generic surface checks.
std::vector<SurfaceTriangle> component_triangles(const TonnetzComplex& complex,
                                                 const std::set<PitchClass>& block);

}  // namespace tonnetz

#endif

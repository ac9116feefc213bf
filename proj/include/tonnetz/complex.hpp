#ifndef TONNETZ_COMPLEX_HPP
#define TONNETZ_COMPLEX_HPP

#include <map>
#include <set>

#include "tonnetz/shape.hpp"
#include "tonnetz/simplex.hpp"

namespace tonnetz {

/// The space of triads C(n1,n2,n3): vertices are Z/N, edges are the mod-N
/// translations of {0,n1}, {0,n2}, {0,n3}, and faces are all translations and
/// inversions of {0, n1, n1+n2}. Immutable after construction.
struct TonnetzComplex {
  TriadShape shape;
  std::set<PitchClass> vertices;
  std::set<Simplex> edges;
  std::set<Simplex> faces;
  std::map<Simplex, std::set<Simplex>> edge_to_faces;

  int scale_size() const noexcept { return shape.scale_size(); }
};

/// Type tags for faces: a translation of the base triad (I), an inversion of
/// it (II), or both when a repeated interval makes the two coincide.
enum class TriadTypeLabel { I, II };

/// Build C(shape) from the definition. Throws ContractViolationError if the
/// translation-orbit edge set fails to coincide with the union of face
/// boundaries (a redundancy audit; it cannot fire for valid shapes).
TonnetzComplex build_complex(const TriadShape& shape);

/// Rebuild a complex from an explicit face set: edges and incidences are
/// derived from face boundaries. Used by deserialization and by the Peck
/// collapse map; does not assume the faces came from build_complex.
TonnetzComplex complex_from_faces(const TriadShape& shape, const std::set<Simplex>& faces);

/// The faces incident to an edge. Throws std::out_of_range when the edge is
/// not part of the complex.
const std::set<Simplex>& faces_containing_edge(const TonnetzComplex& complex, const Simplex& edge);

/// Which of {n1,n2,n3} an edge realizes. Exactly one interval value fits for
/// every edge of the complex.
int edge_length(const TriadShape& shape, const Simplex& edge);

/// How many faces the incidence chart predicts for an edge of length `len`:
/// 1, 2, or 4 depending on whether the other two intervals are equal and
/// whether the edge is a tritone.
int chart_incidence(const TriadShape& shape, int len);

/// Classify a face as translation and/or inversion of the base triad.
/// Throws std::out_of_range when the face is not part of the complex.
std::set<TriadTypeLabel> triad_type(const TonnetzComplex& complex, const Simplex& face);

}  // namespace tonnetz

#endif

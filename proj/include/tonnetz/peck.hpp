#ifndef TONNETZ_PECK_HPP
#define TONNETZ_PECK_HPP

#include <string>
#include <vector>

#include "tonnetz/complex.hpp"
#include "tonnetz/shape.hpp"
#include "tonnetz/surface.hpp"

namespace tonnetz {

/// Per-junction gluing choice when reassembling a circle of tetrahedra into a
/// closed surface: S keeps third notes in their half of the circle, F flips
/// them across.
enum class PeckChoice { S, F };

std::vector<PeckChoice> parse_choices(const std::string& word);
std::string choices_label(const std::vector<PeckChoice>& choices);

/// A closed triangulated surface made from the circle of tetrahedra
/// C(n1,n2,n1+n2), gcd(n1,n2)=1: each tetrahedron block is cut along its two
/// tritones into a band of four triangles, and consecutive bands are reglued
/// at their shared tritone according to the choice word. Each tritone then
/// exists as two parallel edges, so every edge of the surface lies in exactly
/// two faces. Vertices keep their pitch-class labels; the tritone copies are
/// distinguished by an edge tag.
struct PeckAssembly {
  TriadShape base_shape;
  std::vector<PeckChoice> choices;   // one per junction, in circle order
  std::vector<SurfaceTriangle> surface;  // 4L faces over the component's vertices
};

/// Build the assembly for one choice word. The word length must equal the
/// circle length L = n1 + n2; junction p in the word is the tritone
/// {p*n1 mod L, p*n1 mod L + L} reached after p steps around the circle.
/// Throws std::invalid_argument for a shape outside the fourfold-tritone
/// family (n1 < n2, n3 = n1 + n2 = N/2, gcd(n1,n2) = 1) or a wrong-length
/// word.
PeckAssembly assemble(const TriadShape& shape, const std::vector<PeckChoice>& choices);

enum class ClosedSurfaceKind { Torus, KleinBottle };

/// Torus iff the assembly surface is orientable. Agrees with the parity of
/// the number of F choices (even F count gives a torus).
ClosedSurfaceKind classify_assembly(const PeckAssembly& assembly);

/// Identify the two copies of each tritone back to one edge. The result is
/// the original complex C(base_shape), independent of the choice word.
TonnetzComplex collapse(const PeckAssembly& assembly);

}  // namespace tonnetz

#endif

#ifndef TONNETZ_CLASSIFIER_HPP
#define TONNETZ_CLASSIFIER_HPP

#include <compare>
#include <optional>
#include <string>

#include "tonnetz/complex.hpp"
#include "tonnetz/invariants.hpp"
#include "tonnetz/shape.hpp"

namespace tonnetz {

enum class Topology {
  TwoSimplex,
  TetrahedronBoundary,
  Torus,
  Cylinder,
  MoebiusBand,
  CircleOfTetrahedra,
};

/// The homeomorphism type of one connected component. A circle of tetrahedra
/// boundaries carries its length; the length-1 case is reported as
/// TetrahedronBoundary instead, keeping the outcomes disjoint.
struct SpaceKind {
  Topology topology = Topology::Torus;
  int circle_length = 0;  // >= 2, only for CircleOfTetrahedra

  static SpaceKind simple(Topology t);
  static SpaceKind circle_of_tetrahedra(int length);

  /// Stable machine-readable tag, e.g. "torus" or "circle-of-tetrahedra(3)".
  std::string token() const;

  friend auto operator<=>(const SpaceKind&, const SpaceKind&) = default;
};

enum class ClassificationSource { ClosedForm, Oracle };

struct ClassificationRecord {
  TriadShape shape;
  int num_components = 1;
  SpaceKind component_kind;
  CountSummary counts;
  int per_component_euler = 0;
  std::optional<bool> orientable;           // absent for non-surfaces
  std::optional<int> boundary_circuits;     // per component; absent for non-surfaces
  ClassificationSource source = ClassificationSource::ClosedForm;
};

/// Classify from the case table alone: reduce to the coprime base shape, read
/// off the matching row, apply the parity rule to the base scale size.
ClassificationRecord classify_closed_form(const TriadShape& shape);

/// Classify by inspecting the built complex: edge incidences, vertex links,
/// boundary circuits, Euler characteristic, and orientation propagation —
/// no case table. Every component must come out the same kind.
ClassificationRecord classify_by_oracle(const TonnetzComplex& complex);

/// 2*gcd(n,k) when n/gcd and k/gcd are both odd, else gcd(n,k).
/// Always equals gcd(3n+k, n+k).
long long gcd_lemma_value(long long n, long long k);

/// (n1+n2)/gcd(n1,n2) for the circle case n1+n2 = n3 = N/2 with n1 < n2.
/// Throws std::invalid_argument for any other shape.
int circle_length(const TriadShape& shape);

}  // namespace tonnetz

#endif

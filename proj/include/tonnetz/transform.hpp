#ifndef TONNETZ_TRANSFORM_HPP
#define TONNETZ_TRANSFORM_HPP

#include <compare>
#include <set>

#include "tonnetz/complex.hpp"
#include "tonnetz/shape.hpp"
#include "tonnetz/simplex.hpp"

namespace tonnetz {

/// An element of the dihedral T/I group acting on Z/N: the transposition
/// T_k(x) = x + k or the inversion I_k(x) = k - x.
class GroupElement {
 public:
  enum class Kind { Transposition, Inversion };

  static GroupElement transposition(int k, int modulus);
  static GroupElement inversion(int k, int modulus);

  Kind kind() const noexcept { return kind_; }
  int amount() const noexcept { return amount_; }
  int modulus() const noexcept { return modulus_; }

  PitchClass operator()(const PitchClass& x) const;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  GroupElement(Kind kind, int amount, int modulus);

  Kind kind_;
  int amount_;
  int modulus_;
};

/// g after h: T_a T_b = T_{a+b}, T_a I_b = I_{a+b}, I_a T_b = I_{a-b},
/// I_a I_b = T_{a-b}.
GroupElement compose(const GroupElement& g, const GroupElement& h);

/// Elementwise image of a simplex, re-canonicalized.
Simplex apply(const GroupElement& g, const Simplex& s);

/// The faces sharing `edge` other than `face` itself: empty on a boundary
/// edge, a single face for the generic flip, three candidates on a tritone.
/// Throws std::invalid_argument when the edge is not a side of the face and
/// std::out_of_range when the face is not in the complex.
std::set<Simplex> edge_flip(const TonnetzComplex& complex, const Simplex& face,
                            const Simplex& edge);

/// The two type-exchanging operations fixing a tritone {a, a+N/2}: S moves
/// the third note within its half of the circle, F reflects it into the other
/// half. Defined for shapes with n1 < n2 and n3 = N/2; the triad must be a
/// chord of that shape containing a tritone. Both are involutions and
/// S o F = F o S = T_{N/2}.
Simplex op_S(const Simplex& triad, const TriadShape& shape);
Simplex op_F(const Simplex& triad, const TriadShape& shape);

enum class Generator { FlipN1, FlipN2, FlipN3, OpS, OpF };

/// Closure of {start} under the given generators. A generator that does not
/// apply at some face (boundary edge, ambiguous tritone flip, missing
/// tritone) is skipped there, not an error.
std::set<Simplex> orbit(const TonnetzComplex& complex, const Simplex& start,
                        const std::set<Generator>& generators);

}  // namespace tonnetz

#endif

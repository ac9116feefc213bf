#ifndef TONNETZ_SIMPLEX_HPP
#define TONNETZ_SIMPLEX_HPP

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "tonnetz/pitch_class.hpp"

namespace tonnetz {

/// An abstract simplex over Z/N: a set of 1, 2, or 3 distinct pitch classes,
/// stored in ascending residue order. Equality is set equality, so a chord is
/// identified regardless of spelling order.
class Simplex {
 public:
  explicit Simplex(std::vector<PitchClass> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty() || vertices_.size() > 3) {
      throw std::invalid_argument("Simplex: expected 1 to 3 vertices, got " +
                                  std::to_string(vertices_.size()));
    }
    for (std::size_t i = 1; i < vertices_.size(); ++i) {
      vertices_[0].require_same_modulus(vertices_[i]);
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw std::invalid_argument("Simplex: vertices must be distinct");
    }
  }

  static Simplex vertex(PitchClass a) { return Simplex({a}); }
  static Simplex edge(PitchClass a, PitchClass b) { return Simplex({a, b}); }
  static Simplex face(PitchClass a, PitchClass b, PitchClass c) { return Simplex({a, b, c}); }

  /// Build from raw residues in a common modulus.
  static Simplex of(std::initializer_list<int> residues, int modulus) {
    std::vector<PitchClass> vs;
    vs.reserve(residues.size());
    for (int r : residues) vs.emplace_back(r, modulus);
    return Simplex(std::move(vs));
  }

  const std::vector<PitchClass>& vertices() const noexcept { return vertices_; }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  int modulus() const noexcept { return vertices_.front().modulus(); }

  bool contains(const PitchClass& v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  bool contains(const Simplex& sub) const {
    return std::includes(vertices_.begin(), vertices_.end(), sub.vertices_.begin(),
                         sub.vertices_.end());
  }

  /// The codimension-1 subsimplices: the three edges of a face, or the two
  /// endpoints of an edge.
  std::vector<Simplex> boundary() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
      std::vector<PitchClass> sub;
      for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i != skip) sub.push_back(vertices_[i]);
      }
      out.emplace_back(std::move(sub));
    }
    return out;
  }

  std::string label() const {
    std::string out = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(vertices_[i].value());
    }
    return out + "}";
  }

  friend auto operator<=>(const Simplex& a, const Simplex& b) = default;

 private:
  std::vector<PitchClass> vertices_;
};

}  // namespace tonnetz

#endif

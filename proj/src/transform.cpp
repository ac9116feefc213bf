#include "tonnetz/transform.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace tonnetz {

GroupElement::GroupElement(Kind kind, int amount, int modulus)
    : kind_(kind), amount_(amount), modulus_(modulus) {
  if (modulus < 1) {
    throw std::invalid_argument("GroupElement: modulus must be positive");
  }
}

GroupElement GroupElement::transposition(int k, int modulus) {
  return GroupElement(Kind::Transposition, PitchClass(k, modulus).value(), modulus);
}

GroupElement GroupElement::inversion(int k, int modulus) {
  return GroupElement(Kind::Inversion, PitchClass(k, modulus).value(), modulus);
}

PitchClass GroupElement::operator()(const PitchClass& x) const {
  if (x.modulus() != modulus_) {
    throw std::invalid_argument("GroupElement: modulus mismatch");
  }
  return kind_ == Kind::Transposition ? PitchClass(x.value() + amount_, modulus_)
                                      : PitchClass(amount_ - x.value(), modulus_);
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  if (g.modulus() != h.modulus()) {
    throw std::invalid_argument("compose: modulus mismatch");
  }
  const int n = g.modulus();
  const bool g_inv = g.kind() == GroupElement::Kind::Inversion;
  const bool h_inv = h.kind() == GroupElement::Kind::Inversion;
  const int amount = g_inv ? g.amount() - h.amount() : g.amount() + h.amount();
  return g_inv != h_inv ? GroupElement::inversion(amount, n)
                        : GroupElement::transposition(amount, n);
}

Simplex apply(const GroupElement& g, const Simplex& s) {
  std::vector<PitchClass> image;
  image.reserve(s.vertices().size());
  for (const PitchClass& v : s.vertices()) image.push_back(g(v));
  return Simplex(std::move(image));
}

std::set<Simplex> edge_flip(const TonnetzComplex& complex, const Simplex& face,
                            const Simplex& edge) {
  if (!complex.faces.count(face)) {
    throw std::out_of_range("edge_flip: face " + face.label() + " not in complex");
  }
  if (!face.contains(edge)) {
    throw std::invalid_argument("edge_flip: edge " + edge.label() + " is not a side of face " +
                                face.label());
  }
  std::set<Simplex> neighbours = faces_containing_edge(complex, edge);
  neighbours.erase(face);
  return neighbours;
}

namespace {

/// The tritone pair inside a triad, or throw. At most one pair can differ by
/// N/2 within a 3-element set.
std::pair<PitchClass, PitchClass> tritone_of(const Simplex& triad) {
  const int n = triad.modulus();
  if (n % 2 == 0) {
    const auto& vs = triad.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (vs[i].step_to(vs[j]) == n / 2) return {vs[i], vs[j]};
      }
    }
  }
  throw std::invalid_argument("tritone operation: triad " + triad.label() +
                              " contains no tritone");
}

void require_tritone_shape(const TriadShape& shape) {
  if (!(shape.has_tritone() && shape.n1() < shape.n2())) {
    throw std::invalid_argument("tritone operation: shape C(" + shape.label() +
                                ") has no fourfold tritone (need n1 < n2, n3 = N/2)");
  }
}

void require_chord_of_shape(const Simplex& triad, const TriadShape& shape) {
  const auto& vs = triad.vertices();
  if (triad.dimension() != 2 || triad.modulus() != shape.scale_size()) {
    throw std::invalid_argument("tritone operation: " + triad.label() + " is not a triad in Z/" +
                                std::to_string(shape.scale_size()));
  }
  std::array<int, 3> gaps = {vs[0].step_to(vs[1]), vs[1].step_to(vs[2]), vs[2].step_to(vs[0])};
  std::sort(gaps.begin(), gaps.end());
  if (gaps != shape.intervals()) {
    throw std::invalid_argument("tritone operation: " + triad.label() + " is not a chord of C(" +
                                shape.label() + ")");
  }
}

Simplex move_third(const Simplex& triad, const TriadShape& shape, bool flip_halves) {
  require_tritone_shape(shape);
  require_chord_of_shape(triad, shape);
  const auto [a, b] = tritone_of(triad);
  PitchClass third = triad.vertices()[0];
  for (const PitchClass& v : triad.vertices()) {
    if (v != a && v != b) third = v;
  }
  // S reflects the third note across the tritone axis, staying in its half:
  // t -> a + b - t. F reflects through the endpoint a (equivalently b, since
  // 2a = 2b mod N) into the other half: t -> 2a - t.
  const int target = flip_halves ? 2 * a.value() - third.value()
                                 : a.value() + b.value() - third.value();
  return Simplex::face(a, b, PitchClass(target, shape.scale_size()));
}

}  // namespace

Simplex op_S(const Simplex& triad, const TriadShape& shape) {
  return move_third(triad, shape, false);
}

Simplex op_F(const Simplex& triad, const TriadShape& shape) {
  return move_third(triad, shape, true);
}

std::set<Simplex> orbit(const TonnetzComplex& complex, const Simplex& start,
                        const std::set<Generator>& generators) {
  if (!complex.faces.count(start)) {
    throw std::out_of_range("orbit: start face " + start.label() + " not in complex");
  }
  const TriadShape& shape = complex.shape;
  const bool tritone_ops_possible = shape.has_tritone() && shape.n1() < shape.n2();

  std::set<Simplex> seen{start};
  std::deque<Simplex> queue{start};
  auto visit = [&](const Simplex& f) {
    if (seen.insert(f).second) queue.push_back(f);
  };

  while (!queue.empty()) {
    const Simplex face = queue.front();
    queue.pop_front();
    for (Generator g : generators) {
      if (g == Generator::OpS || g == Generator::OpF) {
        if (!tritone_ops_possible) continue;
        bool has_tritone_edge = false;
        for (const Simplex& edge : face.boundary()) {
          if (2 * edge_length(shape, edge) == shape.scale_size()) has_tritone_edge = true;
        }
        if (!has_tritone_edge) continue;
        visit(g == Generator::OpS ? op_S(face, shape) : op_F(face, shape));
        continue;
      }
      const int len = g == Generator::FlipN1   ? shape.n1()
                      : g == Generator::FlipN2 ? shape.n2()
                                               : shape.n3();
      for (const Simplex& edge : face.boundary()) {
        if (edge_length(shape, edge) != len) continue;
        const std::set<Simplex> others = edge_flip(complex, face, edge);
        // Only the unambiguous flip acts; boundary and tritone edges are
        // skipped.
        if (others.size() == 1) visit(*others.begin());
      }
    }
  }
  return seen;
}

}  // namespace tonnetz

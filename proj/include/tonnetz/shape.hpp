#ifndef TONNETZ_SHAPE_HPP
#define TONNETZ_SHAPE_HPP

#include <array>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "tonnetz/errors.hpp"

namespace tonnetz {

/// The step intervals of a triad in an N-tone scale, sorted ascending.
/// Walking the musical circle from any note of the chord, the gaps between
/// consecutive notes are n1, n2, n3 in some cyclic order, and they sum to the
/// scale size N.
class TriadShape {
 public:
  TriadShape(int n1, int n2, int n3) : n1_(n1), n2_(n2), n3_(n3) {
    if (n1 < 1 || n2 < 1 || n3 < 1) {
      throw std::invalid_argument("TriadShape: intervals must be at least 1, got (" + label() + ")");
    }
    if (!(n1 <= n2 && n2 <= n3)) {
      throw std::invalid_argument("TriadShape: intervals must be sorted ascending, got (" +
                                  label() + ")");
    }
    const int n = scale_size();
    // Two consequences of the ordering that the rest of the code leans on:
    // n1, n2 < N/2, and n3 = n1 + n2 exactly when n3 = N/2.
    if (2 * n1_ >= n || 2 * n2_ >= n) {
      throw ContractViolationError("TriadShape: expected n1, n2 < N/2");
    }
    if ((n3_ == n1_ + n2_) != (2 * n3_ == n)) {
      throw ContractViolationError("TriadShape: n3 = n1 + n2 must coincide with n3 = N/2");
    }
  }

  int n1() const noexcept { return n1_; }
  int n2() const noexcept { return n2_; }
  int n3() const noexcept { return n3_; }
  int scale_size() const noexcept { return n1_ + n2_ + n3_; }

  std::array<int, 3> intervals() const noexcept { return {n1_, n2_, n3_}; }

  /// True when the chord spans a tritone, i.e. n3 = N/2.
  bool has_tritone() const noexcept { return 2 * n3_ == scale_size(); }

  int interval_gcd() const noexcept { return std::gcd(std::gcd(n1_, n2_), n3_); }

  std::string label() const {
    return std::to_string(n1_) + "," + std::to_string(n2_) + "," + std::to_string(n3_);
  }

  friend auto operator<=>(const TriadShape& a, const TriadShape& b) = default;

 private:
  int n1_, n2_, n3_;
};

/// Sort three step intervals into a TriadShape. The scale size is implied by
/// their sum. Rejects nonpositive intervals.
inline TriadShape normalize_shape(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) {
    throw std::invalid_argument("normalize_shape: intervals must be at least 1");
  }
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  if (a > b) std::swap(a, b);
  return TriadShape(a, b, c);
}

inline TriadShape normalize_shape(const std::array<int, 3>& intervals) {
  return normalize_shape(intervals[0], intervals[1], intervals[2]);
}

/// All shapes with scale size N, in lexicographic order.
std::vector<TriadShape> all_shapes_with_scale(int scale);

/// All shapes with 3 <= N <= max_scale, ordered by N then lexicographically.
std::vector<TriadShape> all_shapes_up_to(int max_scale);

}  // namespace tonnetz

#endif

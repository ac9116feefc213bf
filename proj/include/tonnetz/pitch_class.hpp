#ifndef TONNETZ_PITCH_CLASS_HPP
#define TONNETZ_PITCH_CLASS_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace tonnetz {

/// A residue in Z/N. The modulus travels with the value so that arithmetic
/// across different scale sizes is a detectable error instead of a silent
/// wrap with the wrong N.
class PitchClass {
 public:
  PitchClass(long long value, int modulus) : modulus_(modulus) {
    if (modulus < 1) {
      throw std::invalid_argument("PitchClass: modulus must be positive, got " +
                                  std::to_string(modulus));
    }
    long long v = value % modulus;
    if (v < 0) v += modulus;
    value_ = static_cast<int>(v);
  }

  int value() const noexcept { return value_; }
  int modulus() const noexcept { return modulus_; }

  PitchClass operator+(long long steps) const { return PitchClass(value_ + steps, modulus_); }
  PitchClass operator-(long long steps) const { return PitchClass(value_ - steps, modulus_); }

  /// Steps from *this to target, reduced into [0, N).
  int step_to(const PitchClass& target) const {
    require_same_modulus(target);
    int d = target.value_ - value_;
    return d < 0 ? d + modulus_ : d;
  }

  friend auto operator<=>(const PitchClass& a, const PitchClass& b) = default;

  void require_same_modulus(const PitchClass& other) const {
    if (modulus_ != other.modulus_) {
      throw std::invalid_argument("PitchClass: mixed moduli " + std::to_string(modulus_) +
                                  " and " + std::to_string(other.modulus_));
    }
  }

 private:
  int modulus_;
  int value_;
};

}  // namespace tonnetz

#endif

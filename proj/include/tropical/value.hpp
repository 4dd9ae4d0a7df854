#pragma once

#include <cmath>
#include <compare>
#include <ostream>
#include <string>

namespace tropical {

inline constexpr double kDefaultEpsilon = 1e-9;

// An element of the max-plus semiring: a finite real or the bottom element
// (-inf). The bottom element is a tag, never an IEEE infinity, so no
// arithmetic path can produce inf - inf.
class TropValue {
 public:
  constexpr TropValue() = default;  // bottom
  constexpr TropValue(double v) : finite_(true), v_(v) {}  // NOLINT

  static constexpr TropValue neg_inf() { return TropValue(); }
  static constexpr TropValue zero() { return TropValue(); }
  static constexpr TropValue one() { return TropValue(0.0); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_inf() const { return !finite_; }

  // Precondition: is_finite().
  constexpr double value() const { return v_; }

  // Finite value or -HUGE_VAL, for consumers that want a plain double.
  double to_double() const { return finite_ ? v_ : -HUGE_VAL; }

  friend constexpr bool operator==(TropValue a, TropValue b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.v_ == b.v_;
  }

  friend constexpr std::partial_ordering operator<=>(TropValue a, TropValue b) {
    if (!a.finite_ || !b.finite_) {
      return static_cast<int>(a.finite_) <=> static_cast<int>(b.finite_);
    }
    return a.v_ <=> b.v_;
  }

 private:
  bool finite_ = false;
  double v_ = 0.0;
};

inline constexpr TropValue kNegInf = TropValue::neg_inf();

// a ⊕ b = max(a, b).
constexpr TropValue tadd(TropValue a, TropValue b) {
  if (a.is_neg_inf()) return b;
  if (b.is_neg_inf()) return a;
  return a.value() >= b.value() ? a : b;
}

// a ⊙ b = a + b, with -inf absorbing.
constexpr TropValue tmul(TropValue a, TropValue b) {
  if (a.is_neg_inf() || b.is_neg_inf()) return kNegInf;
  return TropValue(a.value() + b.value());
}

// Equality up to an absolute tolerance on finite values.
inline bool approx_equal(TropValue a, TropValue b,
                         double eps = kDefaultEpsilon) {
  if (a.is_neg_inf() || b.is_neg_inf()) {
    return a.is_neg_inf() && b.is_neg_inf();
  }
  return std::fabs(a.value() - b.value()) <= eps;
}

// "-inf" for the bottom element; integral values print without a fraction,
// so integer data round-trips exactly.
std::string to_string(TropValue v);

std::ostream& operator<<(std::ostream& os, TropValue v);

}  // namespace tropical

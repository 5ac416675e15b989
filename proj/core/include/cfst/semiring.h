// cfst/semiring.h
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// \file
// The tropical semiring (R+ ∪ {∞}, min, +, ∞, 0). Weights are immutable
// values; all operations are pure and total on the carrier. The weight type
// is the single abstraction point for the semiring: algorithms only use
// zero/one/plus/times/compare, so further semirings can slot in behind the
// same surface.

#ifndef CFST_SEMIRING_H_
#define CFST_SEMIRING_H_

#include <limits>
#include <string>
#include <string_view>

#include "cfst/errors.h"

namespace cfst {

// One element of the tropical semiring: a non-negative extended real.
// plus() is min, times() is arithmetic +, zero() is ∞ and one() is 0.
class TropicalWeight {
 public:
  // Default-constructs the semiring zero (∞: "no path").
  constexpr TropicalWeight() : value_(kInfinity) {}

  // Throws NegativeWeightError if v is negative or NaN.
  explicit TropicalWeight(double v) : value_(check(v)) {}

  static constexpr TropicalWeight zero() { return TropicalWeight(kInfinity, Raw()); }
  static constexpr TropicalWeight one() { return TropicalWeight(0.0, Raw()); }

  constexpr double value() const { return value_; }
  constexpr bool is_zero() const { return value_ == kInfinity; }
  constexpr bool is_one() const { return value_ == 0.0; }
  constexpr bool is_finite() const { return value_ != kInfinity; }

  friend constexpr bool operator==(TropicalWeight a, TropicalWeight b) {
    return a.value_ == b.value_;
  }
  friend constexpr bool operator!=(TropicalWeight a, TropicalWeight b) {
    return a.value_ != b.value_;
  }

  // Shortest decimal that parses back to the same value; ∞ is "Infinity".
  std::string to_string() const;

  // Accepts the to_string() forms: a plain non-negative decimal or
  // "Infinity". Throws ParseError / NegativeWeightError.
  static TropicalWeight from_string(std::string_view text);

 private:
  struct Raw {};
  constexpr TropicalWeight(double v, Raw) : value_(v) {}

  static double check(double v) {
    if (!(v >= 0.0)) {  // catches NaN too
      throw NegativeWeightError("weight must be a non-negative real, got " +
                                std::to_string(v));
    }
    return v == 0.0 ? 0.0 : v;  // normalize -0.0
  }

  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  double value_;
};

// ⊕: min of the two weights. Commutative and idempotent.
constexpr TropicalWeight plus(TropicalWeight a, TropicalWeight b) {
  return a.value() <= b.value() ? a : b;
}

// ⊗: arithmetic sum, with ∞ absorbing.
inline TropicalWeight times(TropicalWeight a, TropicalWeight b) {
  if (a.is_zero() || b.is_zero()) return TropicalWeight::zero();
  return TropicalWeight(a.value() + b.value());
}

// Total order with ∞ greatest; consistent with plus (plus(a,b) is the
// lesser argument). Returns -1, 0 or 1.
constexpr int weight_compare(TropicalWeight a, TropicalWeight b) {
  if (a.value() < b.value()) return -1;
  if (a.value() > b.value()) return 1;
  return 0;
}

constexpr bool operator<(TropicalWeight a, TropicalWeight b) {
  return a.value() < b.value();
}

}  // namespace cfst

#endif  // CFST_SEMIRING_H_

// Copyright 2026 The fre-opt Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FRE_DECIMAL_HPP_
#define FRE_DECIMAL_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace fre {

// Exact base-10 fixed-point number: value = mantissa * 10^-scale.
//
// All comparisons are exact. Arithmetic never rounds; an operation whose
// result does not fit (mantissa beyond int64 or scale beyond kMaxScale)
// throws std::overflow_error. Two decimals with different scales compare
// by value, so 0.4 == 0.40.
class Decimal {
 public:
  static constexpr int kMaxScale = 18;

  constexpr Decimal() = default;

  static Decimal FromScaled(int64_t mantissa, int scale);
  static Decimal FromInt(int64_t value) { return FromScaled(value, 0); }

  // Accepts an optional sign, digits with an optional fraction, and an
  // optional exponent ("-0.25", "1", ".5", "2.5e-3"). Throws
  // std::invalid_argument on malformed text.
  static Decimal Parse(std::string_view text);

  // Recovers the shortest decimal that round-trips to `value`; "0.66" read
  // as a double comes back as exactly 0.66.
  static Decimal FromDouble(double value);

  static Decimal Zero() { return Decimal(); }
  static Decimal One() { return FromScaled(1, 0); }

  int64_t mantissa() const { return mantissa_; }
  int scale() const { return scale_; }

  // Same value at a larger-or-equal scale. Throws std::overflow_error if the
  // mantissa does not fit and std::invalid_argument if `scale` would drop
  // nonzero digits.
  Decimal Rescaled(int scale) const;

  // Same value with trailing fractional zeros stripped.
  Decimal Normalized() const;

  bool IsZero() const { return mantissa_ == 0; }
  bool IsNegative() const { return mantissa_ < 0; }

  // Exact shortest rendering: "0.4", "1", "-13.0727".
  std::string ToString() const;

  // Rounded to `digits` fractional digits, half away from zero, always
  // printing exactly `digits` digits: ToFixed(2) of -13.0727 is "-13.07".
  std::string ToFixed(int digits) const;

  double ToDouble() const;

  Decimal operator-() const;
  friend Decimal operator+(const Decimal& lhs, const Decimal& rhs);
  friend Decimal operator-(const Decimal& lhs, const Decimal& rhs);
  friend Decimal operator*(const Decimal& lhs, const Decimal& rhs);
  Decimal& operator+=(const Decimal& rhs) { return *this = *this + rhs; }

  friend std::strong_ordering operator<=>(const Decimal& lhs,
                                          const Decimal& rhs);
  friend bool operator==(const Decimal& lhs, const Decimal& rhs) {
    return (lhs <=> rhs) == std::strong_ordering::equal;
  }

 private:
  constexpr Decimal(int64_t mantissa, int scale)
      : mantissa_(mantissa), scale_(scale) {}

  int64_t mantissa_ = 0;
  int scale_ = 0;
};

inline const Decimal& Min(const Decimal& a, const Decimal& b) {
  return b < a ? b : a;
}
inline const Decimal& Max(const Decimal& a, const Decimal& b) {
  return a < b ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Decimal& value);

}  // namespace fre

#endif  // FRE_DECIMAL_HPP_

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

#include "fre/decimal.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <system_error>

namespace fre {
namespace {

__extension__ using Wide = __int128;

constexpr std::array<Wide, 2 * Decimal::kMaxScale + 1> MakePowers() {
  std::array<Wide, 2 * Decimal::kMaxScale + 1> p{};
  p[0] = 1;
  for (std::size_t i = 1; i < p.size(); ++i) p[i] = p[i - 1] * 10;
  return p;
}
constexpr auto kPow10 = MakePowers();

bool FitsInt64(Wide v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

// Strips trailing zeros from a wide mantissa until it fits both int64 and
// kMaxScale, or throws.
std::pair<int64_t, int> Narrow(Wide mantissa, int scale) {
  while (scale > 0 && mantissa % 10 == 0 &&
         (scale > Decimal::kMaxScale || !FitsInt64(mantissa))) {
    mantissa /= 10;
    --scale;
  }
  if (scale > Decimal::kMaxScale || !FitsInt64(mantissa)) {
    throw std::overflow_error("decimal result out of representable range");
  }
  return {static_cast<int64_t>(mantissa), scale};
}

}  // namespace

Decimal Decimal::FromScaled(int64_t mantissa, int scale) {
  if (scale < 0 || scale > kMaxScale) {
    throw std::invalid_argument("decimal scale out of range");
  }
  return Decimal(mantissa, scale);
}

Decimal Decimal::Parse(std::string_view text) {
  const std::string_view original = text;
  auto fail = [&]() -> Decimal {
    throw std::invalid_argument("malformed decimal: '" +
                                std::string(original) + "'");
  };
  if (text.empty()) return fail();
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Wide mantissa = 0;
  int scale = 0;
  int digits = 0;
  bool in_fraction = false;
  std::size_t pos = 0;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (ch == '.') {
      if (in_fraction) return fail();
      in_fraction = true;
      continue;
    }
    if (ch < '0' || ch > '9') break;
    mantissa = mantissa * 10 + (ch - '0');
    ++digits;
    if (in_fraction) ++scale;
    if (mantissa > kPow10[2 * kMaxScale]) return fail();
  }
  if (digits == 0) return fail();
  int exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') return fail();
    std::string_view exp_text = text.substr(pos + 1);
    if (!exp_text.empty() && exp_text.front() == '+') exp_text.remove_prefix(1);
    const auto* first = exp_text.data();
    const auto* last = first + exp_text.size();
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last || exp_text.empty()) return fail();
    if (exponent > 2 * kMaxScale || exponent < -2 * kMaxScale) return fail();
  }
  scale -= exponent;
  while (scale < 0) {
    mantissa *= 10;
    ++scale;
    if (mantissa > kPow10[2 * kMaxScale]) return fail();
  }
  if (negative) mantissa = -mantissa;
  try {
    auto [m, s] = Narrow(mantissa, scale);
    return Decimal(m, s);
  } catch (const std::overflow_error&) {
    return fail();
  }
}

Decimal Decimal::FromDouble(double value) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) throw std::invalid_argument("unrepresentable double");
  return Parse(std::string_view(buf.data(), ptr - buf.data()));
}

Decimal Decimal::Rescaled(int scale) const {
  if (scale < 0 || scale > kMaxScale) {
    throw std::invalid_argument("decimal scale out of range");
  }
  if (scale >= scale_) {
    const Wide m = Wide(mantissa_) * kPow10[scale - scale_];
    if (!FitsInt64(m)) throw std::overflow_error("decimal rescale overflow");
    return Decimal(static_cast<int64_t>(m), scale);
  }
  const Wide divisor = kPow10[scale_ - scale];
  if (Wide(mantissa_) % divisor != 0) {
    throw std::invalid_argument("rescale would drop digits");
  }
  return Decimal(static_cast<int64_t>(Wide(mantissa_) / divisor), scale);
}

Decimal Decimal::Normalized() const {
  int64_t m = mantissa_;
  int s = scale_;
  while (s > 0 && m % 10 == 0) {
    m /= 10;
    --s;
  }
  return Decimal(m, m == 0 ? 0 : s);
}

std::string Decimal::ToString() const {
  const Decimal n = Normalized();
  const bool negative = n.mantissa_ < 0;
  // Work on the magnitude as unsigned to survive INT64_MIN.
  uint64_t magnitude = negative ? uint64_t(0) - uint64_t(n.mantissa_)
                                : uint64_t(n.mantissa_);
  std::string digits = std::to_string(magnitude);
  if (n.scale_ > 0) {
    if (static_cast<int>(digits.size()) <= n.scale_) {
      digits.insert(0, n.scale_ - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - n.scale_, 1, '.');
  }
  return negative ? "-" + digits : digits;
}

std::string Decimal::ToFixed(int digits) const {
  if (digits < 0 || digits > kMaxScale) {
    throw std::invalid_argument("display precision out of range");
  }
  Wide m = mantissa_;
  if (scale_ > digits) {
    const Wide divisor = kPow10[scale_ - digits];
    const Wide half = divisor / 2;
    const bool negative = m < 0;
    Wide magnitude = negative ? -m : m;
    magnitude = (magnitude + half) / divisor;
    m = negative ? -magnitude : magnitude;
  } else {
    m *= kPow10[digits - scale_];
  }
  const bool negative = m < 0;
  Wide magnitude = negative ? -m : m;
  std::string text;
  do {
    text.insert(text.begin(), char('0' + int(magnitude % 10)));
    magnitude /= 10;
  } while (magnitude != 0);
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, digits - text.size() + 1, '0');
    }
    text.insert(text.size() - digits, 1, '.');
  }
  return negative ? "-" + text : text;
}

double Decimal::ToDouble() const {
  return std::strtod(ToString().c_str(), nullptr);
}

Decimal Decimal::operator-() const {
  if (mantissa_ == std::numeric_limits<int64_t>::min()) {
    throw std::overflow_error("decimal negation overflow");
  }
  return Decimal(-mantissa_, scale_);
}

Decimal operator+(const Decimal& lhs, const Decimal& rhs) {
  const int scale = std::max(lhs.scale_, rhs.scale_);
  const Wide sum = Wide(lhs.mantissa_) * kPow10[scale - lhs.scale_] +
                   Wide(rhs.mantissa_) * kPow10[scale - rhs.scale_];
  auto [m, s] = Narrow(sum, scale);
  return Decimal(m, s);
}

Decimal operator-(const Decimal& lhs, const Decimal& rhs) {
  const int scale = std::max(lhs.scale_, rhs.scale_);
  const Wide diff = Wide(lhs.mantissa_) * kPow10[scale - lhs.scale_] -
                    Wide(rhs.mantissa_) * kPow10[scale - rhs.scale_];
  auto [m, s] = Narrow(diff, scale);
  return Decimal(m, s);
}

Decimal operator*(const Decimal& lhs, const Decimal& rhs) {
  const Wide product = Wide(lhs.mantissa_) * Wide(rhs.mantissa_);
  auto [m, s] = Narrow(product, lhs.scale_ + rhs.scale_);
  return Decimal(m, s);
}

std::strong_ordering operator<=>(const Decimal& lhs, const Decimal& rhs) {
  if (lhs.scale_ == rhs.scale_) return lhs.mantissa_ <=> rhs.mantissa_;
  const int scale = std::max(lhs.scale_, rhs.scale_);
  const Wide l = Wide(lhs.mantissa_) * kPow10[scale - lhs.scale_];
  const Wide r = Wide(rhs.mantissa_) * kPow10[scale - rhs.scale_];
  return l <=> r;
}

std::ostream& operator<<(std::ostream& os, const Decimal& value) {
  return os << value.ToString();
}

}  // namespace fre

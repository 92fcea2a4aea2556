// Copyright 2026 The Costshare Authors
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

#ifndef COSTSHARE_CORE_RATIONAL_H_
#define COSTSHARE_CORE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace costshare {

// Exact rational number with 64-bit numerator and denominator.
//
// Always stored in lowest terms with a positive denominator. Intermediate
// products are computed in 128 bits; a result that does not fit back into
// 64 bits throws std::overflow_error rather than wrapping silently.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rat(int64_t num, int64_t den);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }
  double ToDouble() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Renders as "p/q", including integers ("2/1") and zero ("0/1").
  std::string ToString() const;

  // Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
  static Rat Parse(std::string_view text);

  // Closest rational with the given denominator at or below value.
  static Rat FloorWithDenominator(double value, int64_t den);

  Rat operator-() const;
  Rat& operator+=(const Rat& other);
  Rat& operator-=(const Rat& other);
  Rat& operator*=(const Rat& other);
  Rat& operator/=(const Rat& other);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.ToString();
  }

 private:
  static Rat FromWide(__int128 num, __int128 den);

  int64_t num_ = 0;
  int64_t den_ = 1;
};

inline Rat Max(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat Min(const Rat& a, const Rat& b) { return b < a ? b : a; }

// H_k = 1 + 1/2 + ... + 1/k, with H_0 = 0.
Rat Harmonic(int k);

}  // namespace costshare

template <>
struct std::hash<costshare::Rat> {
  size_t operator()(const costshare::Rat& r) const noexcept {
    return std::hash<int64_t>()(r.num()) * 1000003u ^
           std::hash<int64_t>()(r.den());
  }
};

#endif  // COSTSHARE_CORE_RATIONAL_H_

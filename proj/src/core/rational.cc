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

#include "costshare/core/rational.h"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace costshare {
namespace {

using Wide = __int128;

Wide Gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool FitsInt64(Wide v) {
  return v >= std::numeric_limits<int64_t>::min() &&
         v <= std::numeric_limits<int64_t>::max();
}

int64_t ParseInt(std::string_view text, std::string_view whole) {
  int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    throw std::invalid_argument("malformed rational literal '" +
                                std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rat::Rat(int64_t num, int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = FromWide(num, den);
}

Rat Rat::FromWide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!FitsInt64(num) || !FitsInt64(den)) {
    throw std::overflow_error("rational overflow beyond 64 bits");
  }
  Rat r;
  r.num_ = static_cast<int64_t>(num);
  r.den_ = static_cast<int64_t>(den);
  return r;
}

std::string Rat::ToString() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::Parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(ParseInt(text, text));
  int64_t num = ParseInt(text.substr(0, slash), text);
  int64_t den = ParseInt(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) +
                                "'");
  }
  return Rat(num, den);
}

Rat Rat::FloorWithDenominator(double value, int64_t den) {
  return Rat(static_cast<int64_t>(std::floor(value * static_cast<double>(den))),
             den);
}

Rat Rat::operator-() const { return FromWide(-static_cast<Wide>(num_), den_); }

Rat& Rat::operator+=(const Rat& other) {
  if (den_ == other.den_) {
    *this = FromWide(static_cast<Wide>(num_) + other.num_, den_);
  } else {
    *this = FromWide(static_cast<Wide>(num_) * other.den_ +
                         static_cast<Wide>(other.num_) * den_,
                     static_cast<Wide>(den_) * other.den_);
  }
  return *this;
}

Rat& Rat::operator-=(const Rat& other) { return *this += -other; }

Rat& Rat::operator*=(const Rat& other) {
  *this = FromWide(static_cast<Wide>(num_) * other.num_,
                   static_cast<Wide>(den_) * other.den_);
  return *this;
}

Rat& Rat::operator/=(const Rat& other) {
  if (other.num_ == 0) throw std::domain_error("division by zero");
  *this = FromWide(static_cast<Wide>(num_) * other.den_,
                   static_cast<Wide>(den_) * other.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  Wide lhs = static_cast<Wide>(a.num_) * b.den_;
  Wide rhs = static_cast<Wide>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat Harmonic(int k) {
  if (k < 0) throw std::invalid_argument("Harmonic: negative index");
  Rat sum;
  for (int t = 1; t <= k; ++t) sum += Rat(1, t);
  return sum;
}

}  // namespace costshare

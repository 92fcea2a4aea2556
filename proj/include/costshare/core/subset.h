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

#ifndef COSTSHARE_CORE_SUBSET_H_
#define COSTSHARE_CORE_SUBSET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace costshare {

// Largest ground set any bitmask-encoded subset may range over.
inline constexpr int kMaxGroundSize = 20;

// A subset of {0, ..., k-1} encoded as a bitmask; element e is bit e.
//
// The tag keeps player sets and item sets from being mixed up.
template <typename Tag>
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(uint32_t bits) : bits_(bits) {}
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) bits_ |= uint32_t{1} << e;
  }

  static constexpr Subset Full(int size) {
    return Subset(size >= 32 ? ~uint32_t{0} : (uint32_t{1} << size) - 1);
  }
  static constexpr Subset Single(int e) { return Subset(uint32_t{1} << e); }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool IsSubsetOf(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Index of the smallest element; undefined on the empty set.
  constexpr int Lowest() const { return std::countr_zero(bits_); }

  constexpr Subset With(int e) const { return Subset(bits_ | (1u << e)); }
  constexpr Subset Without(int e) const { return Subset(bits_ & ~(1u << e)); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const {
    return Subset(bits_ & ~o.bits_);
  }

  std::vector<int> Elements() const {
    std::vector<int> out;
    for (uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  // "{0,2,3}"
  std::string ToString() const {
    std::string s = "{";
    bool first = true;
    for (int e : Elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  uint32_t bits_ = 0;
};

struct PlayerTag {};
struct ItemTag {};

using PlayerSet = Subset<PlayerTag>;
using ItemSet = Subset<ItemTag>;

// Calls fn(sub) for every subset of mask, including the empty set and mask
// itself, in decreasing numeric order.
template <typename Fn>
void ForEachSubsetOf(uint32_t mask, Fn&& fn) {
  uint32_t sub = mask;
  while (true) {
    fn(sub);
    if (sub == 0) break;
    sub = (sub - 1) & mask;
  }
}

}  // namespace costshare

#endif  // COSTSHARE_CORE_SUBSET_H_

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

#include "costshare/core/set_function.h"

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

#include "costshare/core/error.h"

namespace costshare {

struct SetFunction::Impl {
  int ground_size = 0;
  SetFunctionRole role = SetFunctionRole::kGeneric;
  std::vector<Rat> table;
  Oracle oracle;
  size_t cache_cap = 0;
  mutable std::mutex mu;
  mutable std::unordered_map<uint32_t, Rat> cache;
};

namespace {

void CheckGround(int ground_size) {
  if (ground_size < 0 || ground_size > kMaxTableGroundSize) {
    throw SizeLimitError("set function ground size " +
                             std::to_string(ground_size) + " out of range",
                         kMaxTableGroundSize);
  }
}

bool NeedsNormalization(SetFunctionRole role) {
  return role != SetFunctionRole::kGeneric;
}

}  // namespace

SetFunction::SetFunction() : SetFunction(FromTable(0, {Rat(0)})) {}

SetFunction::SetFunction(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

SetFunction SetFunction::FromTable(int ground_size, std::vector<Rat> values,
                                   SetFunctionRole role) {
  CheckGround(ground_size);
  if (values.size() != (size_t{1} << ground_size)) {
    throw PreconditionError("set function table has " +
                            std::to_string(values.size()) +
                            " entries, expected 2^" +
                            std::to_string(ground_size));
  }
  auto impl = std::make_shared<Impl>();
  impl->ground_size = ground_size;
  impl->role = role;
  impl->table = std::move(values);
  SetFunction f(std::move(impl));
  if (NeedsNormalization(role)) ValidateNormalized(f, "set function table");
  return f;
}

SetFunction SetFunction::FromOracle(int ground_size, Oracle oracle,
                                    SetFunctionRole role, size_t cache_cap) {
  CheckGround(ground_size);
  auto impl = std::make_shared<Impl>();
  impl->ground_size = ground_size;
  impl->role = role;
  impl->oracle = std::move(oracle);
  impl->cache_cap = cache_cap;
  SetFunction f(std::move(impl));
  if (NeedsNormalization(role) && !f(0u).is_zero()) {
    throw PreconditionError("set function oracle: f(empty) must be 0");
  }
  return f;
}

int SetFunction::ground_size() const { return impl_->ground_size; }
SetFunctionRole SetFunction::role() const { return impl_->role; }
bool SetFunction::is_table() const { return !impl_->oracle; }

Rat SetFunction::operator()(uint32_t mask) const {
  const Impl& impl = *impl_;
  if (impl.ground_size < 32 && (mask >> impl.ground_size) != 0) {
    throw PreconditionError("set function queried outside its ground set");
  }
  if (!impl.oracle) return impl.table[mask];
  {
    std::lock_guard<std::mutex> lock(impl.mu);
    auto it = impl.cache.find(mask);
    if (it != impl.cache.end()) return it->second;
  }
  Rat value = impl.oracle(mask);
  if (NeedsNormalization(impl.role) && value.sign() < 0) {
    throw PreconditionError("set function oracle returned a negative value");
  }
  std::lock_guard<std::mutex> lock(impl.mu);
  if (impl.cache.size() < impl.cache_cap) impl.cache.emplace(mask, value);
  return value;
}

std::vector<Rat> SetFunction::ToTable() const {
  if (is_table()) return impl_->table;
  std::vector<Rat> out(size_t{1} << ground_size());
  for (uint32_t s = 0; s < out.size(); ++s) out[s] = (*this)(s);
  return out;
}

SetFunction SetFunction::Materialize() const {
  if (is_table()) return *this;
  return FromTable(ground_size(), ToTable(), role());
}

size_t SetFunction::cached_entries() const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  return impl_->cache.size();
}

void ValidateNormalized(const SetFunction& f, const char* what) {
  if (!f(0u).is_zero()) {
    throw PreconditionError(std::string(what) + ": value on the empty set must be 0");
  }
  const uint32_t count = uint32_t{1} << f.ground_size();
  for (uint32_t s = 1; s < count; ++s) {
    if (f(s).sign() < 0) {
      throw PreconditionError(std::string(what) + ": negative value on " +
                              PlayerSet(s).ToString());
    }
  }
}

ClassFlags Classify(const SetFunction& f) {
  const int k = f.ground_size();
  const std::vector<Rat> t = f.ToTable();
  const uint32_t count = uint32_t{1} << k;
  ClassFlags flags;

  // Local conditions are equivalent to the global ones for these two classes.
  flags.nondecreasing = true;
  flags.submodular = true;
  for (uint32_t s = 0; s < count && (flags.nondecreasing || flags.submodular);
       ++s) {
    for (int i = 0; i < k; ++i) {
      if (s >> i & 1u) continue;
      const uint32_t si = s | (1u << i);
      if (t[si] < t[s]) flags.nondecreasing = false;
      for (int j = i + 1; j < k; ++j) {
        if (s >> j & 1u) continue;
        const uint32_t sj = s | (1u << j);
        if (t[si] + t[sj] < t[si | sj] + t[s]) flags.submodular = false;
      }
    }
  }

  std::vector<std::optional<Rat>> by_size(k + 1);
  flags.symmetric = true;
  for (uint32_t s = 0; s < count; ++s) {
    auto& slot = by_size[PlayerSet(s).size()];
    if (!slot) {
      slot = t[s];
    } else if (*slot != t[s]) {
      flags.symmetric = false;
      break;
    }
  }
  flags.xos_symmetric = flags.symmetric;
  for (int size = 2; flags.xos_symmetric && size <= k; ++size) {
    if (*by_size[size - 1] / (size - 1) < *by_size[size] / size) {
      flags.xos_symmetric = false;
    }
  }

  const int limit = flags.nondecreasing ? kMaxSubadditiveMonotoneGround
                                        : kMaxSubadditiveGeneralGround;
  if (k <= limit) {
    bool ok = true;
    for (uint32_t u = 1; u < count && ok; ++u) {
      // Pairs (S, T) with S | T == u.
      ForEachSubsetOf(u, [&](uint32_t s) {
        if (!ok) return;
        if (flags.nondecreasing) {
          const uint32_t rest = u & ~s;
          if (t[s] + t[rest] < t[u]) ok = false;
        } else {
          ForEachSubsetOf(s, [&](uint32_t overlap) {
            if (ok && t[s] + t[(u & ~s) | overlap] < t[u]) ok = false;
          });
        }
      });
    }
    flags.subadditive = ok;
  }
  return flags;
}

}  // namespace costshare

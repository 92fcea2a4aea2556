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

#ifndef COSTSHARE_CORE_ERROR_H_
#define COSTSHARE_CORE_ERROR_H_

#include <stdexcept>
#include <string>

namespace costshare {

// Raised when an input violates an operation's precondition (dimension
// mismatch, wrong valuation class for a mechanism, malformed set function).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive routine is asked to run beyond its size limit.
class SizeLimitError : public std::length_error {
 public:
  SizeLimitError(const std::string& what, int limit)
      : std::length_error(what + " (limit " + std::to_string(limit) + ")"),
        limit_(limit) {}
  int limit() const { return limit_; }

 private:
  int limit_;
};

// A cost oracle that has no finite value on the queried set, e.g. a set
// cover instance whose family does not cover the requested elements.
class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace costshare

#endif  // COSTSHARE_CORE_ERROR_H_

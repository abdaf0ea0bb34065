// Copyright 2026 The pathspace Authors
//
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

#ifndef PATHSPACE_ERROR_HPP_
#define PATHSPACE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pathspace {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Path enumeration exceeded its configured cap.
class PathLimitExceeded : public Error {
 public:
  explicit PathLimitExceeded(std::size_t limit)
      : Error("path enumeration exceeded the limit of " + std::to_string(limit) + " paths"),
        limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

}  // namespace pathspace

#endif  // PATHSPACE_ERROR_HPP_

// Copyright 2026 The Authors.
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

#ifndef TSA_ERRORS_H_
#define TSA_ERRORS_H_

#include <stdexcept>
#include <string>

namespace tsa {

// An exact oracle was asked to enumerate more than it is built for.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A policy or check was invoked without its structural precondition
// (missing same-order certificate, infeasible marginals, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failure inside the LP or ellipsoid machinery.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void CheckSize(bool ok, const std::string& what) {
  if (!ok) throw SizeLimitError(what);
}

}  // namespace tsa

#endif  // TSA_ERRORS_H_

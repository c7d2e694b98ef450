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

// Error types shared across the library. Precondition failures use
// std::invalid_argument directly.

#ifndef TORSION_ERRORS_HPP_
#define TORSION_ERRORS_HPP_

#include <stdexcept>

namespace torsion {

// A ratio was requested against a zero reference count.
class UndefinedRatio : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Least-squares design matrix is rank deficient.
class SingularFit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The basis-exchange chain did not reach its stopping rule within the cap.
class MixingTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace torsion

#endif  // TORSION_ERRORS_HPP_

// Copyright 2026 The phasebit Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace phasebit {

/// Raised when a numeric argument lies outside the mathematical domain of an
/// operation (non-finite angles, non-bit values, unnormalized states).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when an operation is called with arguments that violate its usage
/// contract (zero trial counts, bad indices, empty grids).
class UsageError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace phasebit

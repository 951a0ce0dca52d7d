// Copyright 2026 The dgsp Authors
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

#ifndef DGSP_ERRORS_H
#define DGSP_ERRORS_H

#include <stdexcept>
#include <string>

namespace dgsp {

/// Caller broke an operation's precondition (width mismatch, malformed input).
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A desk-scale size guard was exceeded.
struct GuardError : std::length_error {
    using std::length_error::length_error;
};

/// Problem parameters admit no valid instance (e.g. too few codomain values).
struct InfeasibleParams : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The function does not satisfy the generalized Simon promise.
struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug in the simulator.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dgsp

#endif

// Copyright 2026 The meanking Authors
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

#ifndef MEANKING_ERRORS_H
#define MEANKING_ERRORS_H

#include <stdexcept>
#include <string>

namespace meanking {

/// A constructed or ingested object failed one of its mathematical checks
/// (non-uniform design, missing resolution, broken angle constraint, ...).
///
/// Precondition violations on arguments are reported as std::invalid_argument.
class VerificationError : public std::runtime_error {
   public:
    explicit VerificationError(const std::string &what) : std::runtime_error(what) {
    }
};

/// A simulated measurement produced something that cannot happen for a
/// consistent setup: probabilities not summing to one, or a collapsed state
/// that matches no block vector.
class IntegrityError : public std::runtime_error {
   public:
    explicit IntegrityError(const std::string &what) : std::runtime_error(what) {
    }
};

}  // namespace meanking

#endif

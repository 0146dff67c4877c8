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

#ifndef MEANKING_JSON_IO_H
#define MEANKING_JSON_IO_H

#include <cstdint>
#include <optional>

#include "json.hpp"
#include "meanking/designs.h"
#include "meanking/mub.h"
#include "meanking/protocol.h"
#include "meanking/realization.h"
#include "meanking/reconstruction.h"

namespace meanking {

using Json = nlohmann::ordered_json;

/// [[re, im], ...]
Json vector_to_json(const ComplexVec &v);
ComplexVec vector_from_json(const Json &j);

/// {"v", "blocks", "classes"?, "params", "index_base"}. When `plane_order` is
/// set, points are also labelled by their 1-indexed (x, y) coordinates.
Json design_to_json(const IncidenceDesign &design, const std::optional<Resolution> &resolution,
                    std::optional<std::uint32_t> plane_order = std::nullopt);

struct DesignDocument {
    IncidenceDesign design;
    std::optional<Resolution> resolution;
};

/// Re-verifies everything: block structure, parameters against "params" if
/// present, and "classes" if present. Throws VerificationError on a bad
/// design and std::invalid_argument on malformed JSON.
DesignDocument design_from_json(const Json &j);

Json mub_to_json(const MubFamily &family);
MubFamily mub_from_json(const Json &j);

Json realization_to_json(const Realization &realization, std::optional<std::uint32_t> plane_order = std::nullopt);
Realization realization_from_json(const Json &j);

Json basis_to_json(const ReconstructionBasis &basis);
ReconstructionBasis basis_from_json(const Json &j);

/// One line of a simulation stream.
Json transcript_to_json(const Transcript &t);

}  // namespace meanking

#endif

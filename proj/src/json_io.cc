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

#include "meanking/json_io.h"

#include <stdexcept>
#include <string>

#include "meanking/errors.h"

namespace meanking {

namespace {

template <typename T>
T field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("bad field \"") + key + "\": " + e.what());
    }
}

std::vector<Block> shift_blocks(std::vector<Block> blocks, std::size_t base) {
    for (auto &block : blocks) {
        for (auto &p : block) {
            if (p < base) {
                throw std::invalid_argument("point " + std::to_string(p) + " below index_base");
            }
            p -= base;
        }
    }
    return blocks;
}

Json params_to_json(const DesignParameters &p) {
    return Json{{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"lambda", p.lambda}};
}

}  // namespace

Json vector_to_json(const ComplexVec &v) {
    Json out = Json::array();
    for (const Complex &c : v) {
        out.push_back(Json::array({c.real(), c.imag()}));
    }
    return out;
}

ComplexVec vector_from_json(const Json &j) {
    if (!j.is_array()) {
        throw std::invalid_argument("vector must be an array of [re, im] pairs");
    }
    ComplexVec out(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json &e = j[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw std::invalid_argument("vector entry " + std::to_string(i) + " is not [re, im]");
        }
        out[i] = Complex(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

Json design_to_json(const IncidenceDesign &design, const std::optional<Resolution> &resolution,
                    std::optional<std::uint32_t> plane_order) {
    Json out;
    out["v"] = design.point_count();
    out["index_base"] = 0;
    out["blocks"] = design.blocks();
    if (resolution) {
        out["classes"] = resolution->classes;
    }
    out["params"] = params_to_json(design.parameters());
    if (plane_order) {
        Json labels = Json::array();
        for (std::size_t p = 0; p < design.point_count(); ++p) {
            labels.push_back(Json::array({p / *plane_order + 1, p % *plane_order + 1}));
        }
        out["point_labels"] = labels;
    }
    return out;
}

DesignDocument design_from_json(const Json &j) {
    auto v = field<std::size_t>(j, "v");
    std::size_t base = j.contains("index_base") ? field<std::size_t>(j, "index_base") : 0;
    auto blocks = shift_blocks(field<std::vector<Block>>(j, "blocks"), base);
    IncidenceDesign design = verify_design(v, std::move(blocks));
    if (j.contains("params")) {
        const Json &p = j.at("params");
        DesignParameters claimed{field<std::size_t>(p, "v"), field<std::size_t>(p, "b"), field<std::size_t>(p, "r"),
                                 field<std::size_t>(p, "k"), field<std::size_t>(p, "lambda")};
        if (claimed != design.parameters()) {
            throw VerificationError("declared parameters " + to_string(claimed) + " but blocks give " +
                                    to_string(design.parameters()));
        }
    }
    std::optional<Resolution> resolution;
    if (j.contains("classes")) {
        resolution = check_resolution(design, field<std::vector<std::vector<std::size_t>>>(j, "classes"));
    }
    return DesignDocument{std::move(design), std::move(resolution)};
}

Json mub_to_json(const MubFamily &family) {
    Json bases = Json::array();
    for (const auto &basis : family.bases) {
        Json vectors = Json::array();
        for (const auto &v : basis) {
            vectors.push_back(vector_to_json(v));
        }
        bases.push_back(vectors);
    }
    return Json{{"q", family.dimension}, {"bases", bases}};
}

MubFamily mub_from_json(const Json &j) {
    MubFamily family;
    family.dimension = field<std::size_t>(j, "q");
    const Json &bases = j.at("bases");
    if (!bases.is_array()) {
        throw std::invalid_argument("\"bases\" must be an array");
    }
    for (const Json &basis : bases) {
        std::vector<ComplexVec> vectors;
        for (const Json &v : basis) {
            vectors.push_back(vector_from_json(v));
            if (vectors.back().size() != family.dimension) {
                throw std::invalid_argument("MUB vector has " + std::to_string(vectors.back().size()) +
                                            " entries, expected " + std::to_string(family.dimension));
            }
        }
        family.bases.push_back(std::move(vectors));
    }
    return family;
}

Json realization_to_json(const Realization &realization, std::optional<std::uint32_t> plane_order) {
    Json out = design_to_json(realization.design, realization.resolution, plane_order);
    out["dimension"] = realization.dimension;
    Json vectors = Json::array();
    for (const auto &v : realization.vectors) {
        vectors.push_back(vector_to_json(v));
    }
    out["vectors"] = vectors;
    return out;
}

Realization realization_from_json(const Json &j) {
    DesignDocument doc = design_from_json(j);
    if (!doc.resolution) {
        throw std::invalid_argument("a realization needs \"classes\"");
    }
    const Json &vectors = j.at("vectors");
    if (!vectors.is_array() || vectors.size() != doc.design.blocks().size()) {
        throw std::invalid_argument("\"vectors\" must hold one vector per block");
    }
    Realization out{std::move(doc.design), std::move(*doc.resolution), 0, {}};
    for (const Json &v : vectors) {
        out.vectors.push_back(vector_from_json(v));
    }
    out.dimension = j.contains("dimension") ? field<std::size_t>(j, "dimension") : out.vectors.front().size();
    for (const auto &v : out.vectors) {
        if (v.size() != out.dimension) {
            throw std::invalid_argument("realization vector length differs from \"dimension\"");
        }
    }
    return out;
}

Json basis_to_json(const ReconstructionBasis &basis) {
    Json out;
    out["dimension"] = basis.dimension;
    Json index = Json::array();
    if (basis.index == BasisIndex::kPoint) {
        index.push_back("point");
        for (std::size_t p = 0; p < basis.vectors.size(); ++p) {
            index.push_back(p);
        }
    } else {
        index.push_back("function");
        for (const auto &f : basis.functions) {
            index.push_back(f.values());
        }
    }
    out["index"] = index;
    if (basis.alpha) {
        out["alpha"] = *basis.alpha;
    }
    if (basis.beta) {
        out["beta"] = *basis.beta;
    }
    if (basis.parallel_class) {
        out["class"] = *basis.parallel_class;
    }
    Json vectors = Json::array();
    for (const auto &v : basis.vectors) {
        vectors.push_back(vector_to_json(v));
    }
    out["vectors"] = vectors;
    return out;
}

ReconstructionBasis basis_from_json(const Json &j) {
    ReconstructionBasis out;
    out.dimension = field<std::size_t>(j, "dimension");
    const Json &index = j.at("index");
    if (!index.is_array() || index.empty() || !index[0].is_string()) {
        throw std::invalid_argument("\"index\" must start with \"point\" or \"function\"");
    }
    std::string kind = index[0].get<std::string>();
    if (kind == "point") {
        out.index = BasisIndex::kPoint;
    } else if (kind == "function") {
        out.index = BasisIndex::kFunction;
        for (std::size_t i = 1; i < index.size(); ++i) {
            out.functions.emplace_back(index[i].get<std::vector<std::uint32_t>>());
        }
    } else {
        throw std::invalid_argument("unknown basis index kind \"" + kind + "\"");
    }
    if (j.contains("alpha")) {
        out.alpha = field<double>(j, "alpha");
    }
    if (j.contains("beta")) {
        out.beta = field<double>(j, "beta");
    }
    if (j.contains("class")) {
        out.parallel_class = field<std::size_t>(j, "class");
    }
    for (const Json &v : j.at("vectors")) {
        out.vectors.push_back(vector_from_json(v));
        if (out.vectors.back().size() != out.dimension) {
            throw std::invalid_argument("basis vector length differs from \"dimension\"");
        }
    }
    if (index.size() - 1 != out.vectors.size()) {
        throw std::invalid_argument("\"index\" labels do not match the number of vectors");
    }
    return out;
}

Json transcript_to_json(const Transcript &t) {
    Json out;
    out["seed"] = t.seed;
    out["model"] = t.model.label();
    out["king_class"] = t.king_class;
    out["king_block"] = t.king_block;
    out["king_outcome"] = t.king_outcome;
    out["alice_index"] = t.alice_index;
    out["predicted_block"] = t.predicted_block;
    out["success"] = t.success;
    return out;
}

}  // namespace meanking

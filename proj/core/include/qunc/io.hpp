// Copyright 2026 The qunc Authors
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

#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "qunc/assist.hpp"
#include "qunc/channels.hpp"
#include "qunc/measures.hpp"
#include "qunc/types.hpp"

namespace qunc::io {

using nlohmann::json;

// State documents: {"dim": d, "re": [[...]], "im": [[...]]} for a density
// matrix (row-major) or {"dim": d, "re": [...], "im": [...]} for a pure state.
// "im" may be omitted for real data. Loaders validate every invariant against
// tol and throw InvariantError / DimensionError naming the bound.
using State = std::variant<DensityMatrix, PureState>;

State state_from_json(const json& doc, double tol = kTolStruct);
json state_to_json(const DensityMatrix& rho);
json state_to_json(const PureState& psi);

// Pure states become their projector.
DensityMatrix density_from_json(const json& doc, double tol = kTolStruct);

// {"dim": d, "kraus": [{"re": [[...]], "im": [[...]]}, ...]}
KrausChannel channel_from_json(const json& doc, double tol = kTolStruct);
json channel_to_json(const KrausChannel& channel);

json report_to_json(const MeasureReport& report);
json verdict_to_json(const ChannelVerdict& verdict);
json ca_result_to_json(const CaResult& result);
json sandwich_to_json(const SandwichReport& report);

// Throws Error when the file is missing or not JSON.
json read_json_file(const std::filesystem::path& path);

}  // namespace qunc::io

// Copyright 2026 The Veldkamp Authors
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

#include <string>
#include <vector>

#include "json.hpp"
#include "veldkamp/geometry.h"
#include "veldkamp/group_action.h"
#include "veldkamp/hyperplanes.h"
#include "veldkamp/subgeometries.h"
#include "veldkamp/veldkamp_lines.h"

namespace veldkamp {

using Json = nlohmann::ordered_json;

std::string label(QubitCount n, std::uint64_t v);
Json labels(QubitCount n, const std::vector<std::uint64_t> &points);
Json labels(const PointSet &points);
Json line_json(QubitCount n, const Line &l);

/// {kind, p, arf, size, points[]}; arf is null for perp-sets.
Json hyperplane_json(const Hyperplane &h, bool with_points = true);
/// {type, members[3], core_size, core[]} plus composition and formula check.
Json veldkamp_line_json(const VeldkampLine &line);
/// {type, composition, core_size, count, formula_value, match, ...}.
Json census_row_json(const CensusRow &row);
Json census_json(const CensusTable &table);
Json v2_witness_json(QubitCount n, const V2Witness &w);
Json v2_report_json(const V2Report &report);
Json mermin_json(const MerminSquare &square);
Json gq_parameters_json(const GQParameters &p);
Json section_summary_json(const SectionSummary &summary, bool with_sections);
Json swap_json(const SymplecticMap &m);

/// n,type,composition,core_size,count with a header row and LF endings.
std::string census_csv(const CensusTable &table);
/// n,kind,p,arf,size.
std::string hyperplanes_csv(const HyperplaneCatalog &catalog);
/// Undirected DOT graph, vertices named by Pauli label.
std::string collinearity_dot(const Geometry &g);
Json collinearity_json(const Geometry &g);

}  // namespace veldkamp

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

#include "veldkamp/serialize.h"

#include <sstream>

#include "veldkamp/pauli.h"

namespace veldkamp {

std::string label(QubitCount n, std::uint64_t v) {
    return decode(PauliVector(n, v));
}

Json labels(QubitCount n, const std::vector<std::uint64_t> &points) {
    Json out = Json::array();
    for (std::uint64_t v : points) {
        out.push_back(label(n, v));
    }
    return out;
}

Json labels(const PointSet &points) {
    return labels(points.qubits(), points.to_vector());
}

Json line_json(QubitCount n, const Line &l) {
    return Json::array({label(n, l.points[0]), label(n, l.points[1]), label(n, l.points[2])});
}

Json hyperplane_json(const Hyperplane &h, bool with_points) {
    const HyperplaneKind &k = h.kind();
    Json out;
    out["key"] = k.key();
    out["kind"] = k.is_perp() ? "perp" : "quadric";
    out["p"] = decode(k.p());
    if (auto arf = k.arf()) {
        out["arf"] = *arf;
    } else {
        out["arf"] = nullptr;
    }
    out["type"] = to_string(k.type());
    out["size"] = h.size();
    if (with_points) {
        out["points"] = labels(h.points());
    }
    return out;
}

Json veldkamp_line_json(const VeldkampLine &line) {
    VeldkampLineType type = classify_line(line);
    Json out;
    out["type"] = to_string(type);
    out["composition"] = composition_string(type);
    Json members = Json::array();
    for (const auto &m : line.members()) {
        members.push_back(m.key());
    }
    out["members"] = members;
    out["core_size"] = line.core().size();
    out["core_size_formula"] = core_size_formula(line.qubits(), type);
    out["core"] = labels(line.core());
    return out;
}

Json census_row_json(const CensusRow &row) {
    Json out;
    out["type"] = to_string(row.type);
    out["composition"] = composition_string(row.type);
    out["core_size"] = row.core_size;
    out["count"] = row.line_count;
    out["formula_value"] = row.formula_count;
    out["match"] = row.match();
    out["pair_count"] = row.pair_count;
    out["core_size_violations"] = row.core_size_violations;
    return out;
}

Json census_json(const CensusTable &table) {
    Json out;
    out["n"] = table.n.value();
    Json rows = Json::array();
    for (const auto &row : table.rows) {
        rows.push_back(census_row_json(row));
    }
    out["rows"] = rows;
    out["total_lines"] = table.total_lines;
    out["expected_total"] = veldkamp_line_total(table.n);
    out["total_pairs"] = table.total_pairs;
    out["closure_violations"] = table.closure_violations;
    out["match"] = table.all_match();
    return out;
}

Json v2_witness_json(QubitCount n, const V2Witness &w) {
    Json out;
    out["a"] = w.a.key();
    out["b"] = w.b.key();
    out["c"] = w.c.key();
    out["core"] = labels(n, w.core);
    out["c_cap_a"] = w.c_cap_a;
    out["c_cap_b"] = w.c_cap_b;
    return out;
}

Json v2_report_json(const V2Report &report) {
    Json out;
    out["n"] = report.n.value();
    out["mode"] = report.mode == V2Mode::kExhaustive ? "exhaustive" : "sampled";
    if (report.mode == V2Mode::kSampled) {
        out["seed"] = report.seed;
    }
    out["pairs_checked"] = report.pairs_checked;
    out["violations"] = report.violations;
    out["holds"] = report.holds();
    out["first_violation"] =
        report.first_violation ? v2_witness_json(report.n, *report.first_violation) : Json(nullptr);
    out["perp_pair_witness"] =
        report.perp_pair_witness ? v2_witness_json(report.n, *report.perp_pair_witness) : Json(nullptr);
    return out;
}

Json mermin_json(const MerminSquare &square) {
    Json out;
    out["source"] = square.source.key();
    Json cells = Json::array();
    for (const auto &row : square.cells) {
        Json r = Json::array();
        for (const auto &cell : row) {
            r.push_back(cell.to_string());
        }
        cells.push_back(r);
    }
    out["cells"] = cells;
    out["row_signs"] = square.row_signs;
    out["column_signs"] = square.column_signs;
    out["negative_lines"] = square.negative_line_count;
    out["odd"] = square.negative_line_count % 2 == 1;
    return out;
}

Json gq_parameters_json(const GQParameters &p) {
    return Json{{"s", p.s}, {"t", p.t}};
}

Json section_summary_json(const SectionSummary &summary, bool with_sections) {
    Json out;
    out["base"] = summary.base.key();
    out["base_parameters"] = gq_parameters_json(summary.base_parameters);
    Json histogram = Json::array();
    for (const auto &[key, count] : summary.histogram) {
        histogram.push_back(Json{{"size", key.first}, {"shape", key.second}, {"count", count}});
    }
    out["histogram"] = histogram;
    out["only_expected_shapes"] = summary.only_expected_shapes();
    if (with_sections) {
        Json sections = Json::array();
        QubitCount n = summary.base.qubits();
        for (const auto &s : summary.sections) {
            Json j;
            j["other"] = s.other.key();
            j["size"] = s.size;
            j["shape"] = to_string(s.shape);
            j["gq"] = s.gq ? gq_parameters_json(*s.gq) : Json(nullptr);
            j["perp_point"] = s.perp_point ? Json(label(n, *s.perp_point)) : Json(nullptr);
            sections.push_back(j);
        }
        out["sections"] = sections;
    }
    return out;
}

Json swap_json(const SymplecticMap &m) {
    Json out;
    out["word"] = m.word_labels();
    out["length"] = m.word().size();
    Json rows = Json::array();
    for (int r = 0; r < m.matrix().rows(); r++) {
        std::string row;
        for (int c = 0; c < m.matrix().cols(); c++) {
            row += m.matrix().at(r, c) ? '1' : '0';
        }
        rows.push_back(row);
    }
    out["matrix"] = rows;
    return out;
}

std::string census_csv(const CensusTable &table) {
    std::ostringstream out;
    out << "n,type,composition,core_size,count\n";
    for (const auto &row : table.rows) {
        out << table.n.value() << ',' << to_string(row.type) << ',' << composition_string(row.type) << ','
            << row.core_size << ',' << row.line_count << '\n';
    }
    return out.str();
}

std::string hyperplanes_csv(const HyperplaneCatalog &catalog) {
    std::ostringstream out;
    out << "n,kind,p,arf,size\n";
    for (const auto &h : catalog.hyperplanes) {
        const HyperplaneKind &k = h.kind();
        out << catalog.n.value() << ',' << (k.is_perp() ? "perp" : "quadric") << ',' << decode(k.p()) << ',';
        if (auto arf = k.arf()) {
            out << *arf;
        }
        out << ',' << h.size() << '\n';
    }
    return out.str();
}

std::string collinearity_dot(const Geometry &g) {
    Graph graph = collinearity_graph(g);
    QubitCount n = g.qubits();
    std::ostringstream out;
    out << "graph G" << n.value() << " {\n";
    for (size_t v = 0; v < graph.vertex_count(); v++) {
        out << "  " << label(n, v + 1) << ";\n";
    }
    for (auto [u, v] : graph.edges()) {
        out << "  " << label(n, u + 1) << " -- " << label(n, v + 1) << ";\n";
    }
    out << "}\n";
    return out.str();
}

Json collinearity_json(const Geometry &g) {
    Graph graph = collinearity_graph(g);
    QubitCount n = g.qubits();
    Json vertices = Json::array();
    for (size_t v = 0; v < graph.vertex_count(); v++) {
        vertices.push_back(label(n, v + 1));
    }
    Json edges = Json::array();
    for (auto [u, v] : graph.edges()) {
        edges.push_back(Json::array({label(n, u + 1), label(n, v + 1)}));
    }
    return Json{{"n", n.value()}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace veldkamp

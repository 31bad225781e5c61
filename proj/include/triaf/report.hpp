#pragma once

// JSON reports, tower spec loading, and DOT output.

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "triaf/triaf.hpp"

namespace triaf {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

class SpecError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

inline Json to_json(const MatrixUnit &e) { return Json::array({e.block, e.row, e.col}); }

inline Json to_json(const Shape &s) { return Json(s.blocks()); }

inline std::string staircase_label(const Ideal &ideal)
{
    std::string out;
    auto p = staircase_of(ideal);
    for (std::size_t b = 0; b < p.heights.size(); ++b) {
        if (b)
            out += "|";
        for (std::size_t j = 0; j < p.heights[b].size(); ++j) {
            if (j)
                out += ",";
            out += std::to_string(p.heights[b][j]);
        }
    }
    return out;
}

inline Json ideal_json(const Ideal &ideal)
{
    Json j;
    j["members"] = ideal.members().count();
    Json ex = Json::array();
    for (const auto &e : ideal.excluded_units())
        ex.push_back(to_json(e));
    j["excluded"] = std::move(ex);
    j["staircase"] = staircase_label(ideal);
    return j;
}

inline Json classification_json(const Classification &c)
{
    return Json{{"prime", c.prime},
                {"k4", c.k4},
                {"meet_irreducible", c.meet_irreducible},
                {"maximal", c.maximal},
                {"primary", c.primary}};
}

inline Json strands_json(const Embedding &emb)
{
    Json out = Json::array();
    for (const auto &st : emb.strands())
        out.push_back(Json{{"source_block", st.source_block}, {"target_block", st.target_block}, {"positions", st.positions}});
    return out;
}

inline Json point_set_json(const PointSet &f, const IdealSpace &space, const std::vector<MatrixUnit> *labels)
{
    Json out = Json::array();
    f.for_each([&](std::size_t p) {
        if (labels)
            out.push_back(to_json((*labels)[p]));
        else
            out.push_back(staircase_label(space.points()[p]));
    });
    return out;
}

inline Json axiom_json(const AxiomResult &a, const IdealSpace &space, const std::vector<MatrixUnit> *labels)
{
    Json j{{"holds", a.holds}};
    if (!a.holds) {
        Json w = Json::array();
        for (const auto &f : a.witness)
            w.push_back(point_set_json(f, space, labels));
        j["witness"] = std::move(w);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Tower spec documents
//
// {
//   "schema_version": 1,
//   "shapes": [[2], [4], [8]],
//   "embeddings": [ {"kind": "refinement", "multiplicity": 2},
//                   {"kind": "standard", "multiplicity": 2},
//                   {"kind": "strands", "strands": [{"source_block": 1, "target_block": 1,
//                                                    "positions": [1, 2, 5, 6]}, ...]},
//                   {"kind": "counterexample"} ],
//   "analyses": ["chains", "k4_limit", "decompose", "gelfand"]
// }
// ---------------------------------------------------------------------------

struct TowerSpec
{
    Tower tower;
    std::vector<std::string> analyses;
};

inline const std::vector<std::string> &all_tower_analyses()
{
    static const std::vector<std::string> all{"chains", "k4_limit", "decompose", "gelfand"};
    return all;
}

inline TowerSpec parse_tower_spec(const Json &doc)
{
    try {
        if (!doc.is_object())
            throw SpecError("spec must be a JSON object");
        if (!doc.contains("schema_version") || doc.at("schema_version").get<int>() != schema_version)
            throw SpecError("unsupported or missing schema_version (expected " + std::to_string(schema_version) + ")");
        std::vector<Shape> shapes;
        for (const auto &s : doc.at("shapes")) {
            auto blocks = s.get<std::vector<int>>();
            shapes.emplace_back(blocks, static_cast<int>(shapes.size()));
        }
        if (shapes.empty())
            throw SpecError("spec needs at least one shape");
        const Json embs = doc.value("embeddings", Json::array());
        if (embs.size() + 1 != shapes.size())
            throw SpecError("need exactly one embedding per consecutive pair of shapes");
        std::vector<Embedding> maps;
        for (std::size_t k = 0; k < embs.size(); ++k) {
            const Json &e = embs[k];
            auto kind = e.at("kind").get<std::string>();
            const Shape &src = shapes[k];
            const Shape &dst = shapes[k + 1];
            if (kind == "standard")
                maps.push_back(standard_embedding(src, dst, e.at("multiplicity").get<int>()));
            else if (kind == "refinement")
                maps.push_back(refinement_embedding(src, dst, e.at("multiplicity").get<int>()));
            else if (kind == "strands") {
                std::vector<Strand> strands;
                for (const auto &st : e.at("strands"))
                    strands.push_back({st.at("source_block").get<int>(), st.at("target_block").get<int>(),
                                       st.at("positions").get<std::vector<int>>()});
                maps.emplace_back(src, dst, std::move(strands));
            } else if (kind == "counterexample") {
                auto c = amplified_refinement_counterexample();
                if (!(src == c.source()) || !(dst == c.target()))
                    throw SpecError("counterexample embedding needs shapes [4] -> [8]");
                maps.push_back(std::move(c));
            } else
                throw SpecError("unknown embedding kind '" + kind + "'");
        }
        TowerSpec spec{maps.empty() ? Tower(shapes.front()) : Tower(std::move(maps)), {}};
        if (doc.contains("analyses")) {
            for (const auto &a : doc.at("analyses")) {
                auto name = a.get<std::string>();
                const auto &all = all_tower_analyses();
                if (std::find(all.begin(), all.end(), name) == all.end())
                    throw SpecError("unknown analysis '" + name + "'");
                spec.analyses.push_back(name);
            }
        } else
            spec.analyses = all_tower_analyses();
        return spec;
    } catch (const SpecError &) {
        throw;
    } catch (const std::exception &ex) {
        throw SpecError(ex.what());
    }
}

inline Json tower_spec_json(const Tower &tower, const std::vector<std::string> &analyses)
{
    Json shapes = Json::array();
    for (const auto &s : tower.shapes())
        shapes.push_back(to_json(s));
    Json embs = Json::array();
    for (const auto &m : tower.maps())
        embs.push_back(Json{{"kind", "strands"}, {"strands", strands_json(m)}});
    return Json{{"schema_version", schema_version}, {"shapes", shapes}, {"embeddings", embs}, {"analyses", analyses}};
}

// ---------------------------------------------------------------------------
// DOT
// ---------------------------------------------------------------------------

inline std::string hasse_dot(const IdealLattice &lattice)
{
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
    for (std::size_t k = 0; k < lattice.size(); ++k)
        os << "  n" << k << " [label=\"" << staircase_label(lattice[k]) << "\"];\n";
    for (auto [a, b] : lattice.hasse_edges())
        os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

/// Points are labelled by the unit e of I(e); an edge p -> q means p lies
/// in the closure of q with nothing in between.
inline std::string specialization_dot(const IdealSpace &space, const std::vector<MatrixUnit> &labels)
{
    auto order = specialization_order(space);
    std::ostringstream os;
    os << "digraph specialization {\n  rankdir=BT;\n";
    for (std::size_t p = 0; p < space.size(); ++p)
        os << "  p" << p << " [label=\"" << to_string(labels[p]) << "\"];\n";
    for (auto [a, b] : order.cover_edges())
        os << "  p" << a << " -> p" << b << ";\n";
    os << "}\n";
    return os.str();
}

inline std::string bratteli_dot(const Tower &tower)
{
    std::ostringstream os;
    os << "digraph bratteli {\n  rankdir=TB;\n";
    for (int k = 0; k <= tower.top_level(); ++k) {
        const Shape &s = tower.shape(k);
        for (int b = 1; b <= s.block_count(); ++b)
            os << "  L" << k << "B" << b << " [label=\"T" << s.block_size(b) << "\"];\n";
    }
    for (int k = 0; k < tower.top_level(); ++k)
        for (const auto &st : tower.map(k).strands()) {
            os << "  L" << k << "B" << st.source_block << " -> L" << k + 1 << "B" << st.target_block << " [label=\"";
            for (std::size_t i = 0; i < st.positions.size(); ++i)
                os << (i ? "," : "") << st.positions[i];
            os << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace triaf

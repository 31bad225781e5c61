#pragma once

// Report builders behind the `lattice`, `topology` and `tower` commands.
// Each returns a JSON document whose "violations" array lists every claimed
// property that failed; an empty array means everything checked out.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "triaf/report.hpp"

namespace triaf {

struct CommandLimits
{
    EnumerationLimits enumeration{};
    /// Largest lattice for which the full classification table is built.
    std::size_t classify_max_ideals = 500;
    /// Largest top-level lattice for the exhaustive decomposition check.
    std::size_t decompose_max_ideals = 10'000;
    std::size_t max_chains = 200'000;
};

inline Json lattice_report(const Shape &shape, const CommandLimits &limits = {})
{
    IdealLattice lattice = enumerate_ideals(shape, limits.enumeration);
    if (lattice.size() > limits.classify_max_ideals)
        throw CapExceeded("classification limited to lattices of " + std::to_string(limits.classify_max_ideals) +
                          " ideals; shape " + shape.describe() + " has " + std::to_string(lattice.size()));
    auto classes = classify_all(lattice);
    Json violations = Json::array();
    Json table = Json::array();
    std::size_t mi = 0, k4 = 0, prime = 0;
    for (std::size_t k = 0; k < lattice.size(); ++k) {
        const auto &c = classes[k];
        Json row = ideal_json(lattice[k]);
        row["index"] = k;
        row.update(classification_json(c));
        table.push_back(std::move(row));
        mi += c.meet_irreducible;
        k4 += c.k4;
        prime += c.prime;
        if (c.prime && !c.k4)
            violations.push_back("ideal " + std::to_string(k) + " is prime but not (K4)");
        if (c.k4 != c.meet_irreducible)
            violations.push_back("ideal " + std::to_string(k) + ": (K4) and meet-irreducible disagree");
    }
    std::vector<Ideal> expected = meet_irreducibles(shape);
    std::sort(expected.begin(), expected.end());
    std::vector<Ideal> found;
    for (std::size_t k = 0; k < lattice.size(); ++k)
        if (classes[k].meet_irreducible)
            found.push_back(lattice[k]);
    if (found != expected)
        violations.push_back("meet-irreducible ideals are not exactly the I(e)");

    return Json{{"schema_version", schema_version},
                {"command", "lattice"},
                {"shape", to_json(shape)},
                {"unit_count", shape.unit_count()},
                {"ideal_count", lattice.size()},
                {"hasse_edges", lattice.hasse_edges().size()},
                {"counts", Json{{"prime", prime}, {"k4", k4}, {"meet_irreducible", mi}, {"maximal", lattice.maximal_ideals().size()}}},
                {"ideals", std::move(table)},
                {"violations", std::move(violations)}};
}

inline Json meet_irreducibles_report(const Shape &shape)
{
    Json list = Json::array();
    for (const auto &e : shape.units()) {
        Json row = ideal_json(Ideal::largest_excluding(shape, e));
        row["unit"] = to_json(e);
        list.push_back(std::move(row));
    }
    return Json{{"schema_version", schema_version},
                {"command", "lattice"},
                {"shape", to_json(shape)},
                {"meet_irreducible_count", list.size()},
                {"meet_irreducibles", std::move(list)}};
}

inline Json topology_report(const Shape &shape, const CommandLimits &limits = {})
{
    IdealSpace space = IdealSpace::of_meet_irreducibles(shape);
    const auto &units = shape.units();
    TopologyReport kr = check_kuratowski(space, 12, limits.enumeration);
    IdealLattice lattice = enumerate_ideals(shape, limits.enumeration);
    BijectionReport br = closed_ideal_bijection(space, lattice);
    auto order = specialization_order(space);

    bool order_matches = true;
    for (std::size_t p = 0; p < space.size(); ++p)
        for (std::size_t q = 0; q < space.size(); ++q)
            if (order(p, q) != leq_p(shape, units[p], units[q]))
                order_matches = false;
    bool expect_t1 = std::all_of(shape.blocks().begin(), shape.blocks().end(), [](int n) { return n == 1; });

    Json violations = Json::array();
    if (!kr.is_topology())
        violations.push_back("hull-kernel closure is not a topology");
    if (!br.holds)
        violations.push_back("closed sets and ideals are not in bijection");
    if (!order_matches)
        violations.push_back("specialization order differs from <=_p");
    if (order.is_t1() != expect_t1)
        violations.push_back("T1 separation differs from expectation");

    return Json{{"schema_version", schema_version},
                {"command", "topology"},
                {"shape", to_json(shape)},
                {"points", space.size()},
                {"mode", to_string(kr.mode)},
                {"k1", axiom_json(kr.k1, space, &units)},
                {"k2", axiom_json(kr.k2, space, &units)},
                {"k3", axiom_json(kr.k3, space, &units)},
                {"k4", axiom_json(kr.k4, space, &units)},
                {"bijection",
                 Json{{"holds", br.holds}, {"ideals", br.ideal_count}, {"closed_sets", br.closed_set_count}}},
                {"specialization_matches_leq_p", order_matches},
                {"specialization_edges", order.cover_edges().size()},
                {"t1", order.is_t1()},
                {"violations", std::move(violations)}};
}

inline Json chain_units_json(const UnitChain &c)
{
    Json u = Json::array();
    for (const auto &e : c.units)
        u.push_back(to_json(e));
    return u;
}

inline Json tower_report(const Tower &tower, const std::vector<std::string> &analyses, const CommandLimits &limits = {})
{
    auto wants = [&](const char *a) { return std::find(analyses.begin(), analyses.end(), a) != analyses.end(); };
    bool sr = tower.has_standard_refinement_components();
    Json violations = Json::array();

    Json shapes = Json::array();
    for (const auto &s : tower.shapes())
        shapes.push_back(to_json(s));
    Json embs = Json::array();
    for (const auto &m : tower.maps())
        embs.push_back(Json{{"standard_refinement_components", has_standard_refinement_components(m)},
                            {"strands", strands_json(m)}});

    auto chains = all_full_chains(tower, limits.max_chains);
    LatticeCache cache(limits.enumeration);
    std::map<std::pair<int, std::size_t>, bool> k4_memo;
    Json table = Json::array();
    std::size_t standard_form = 0, containment_failures = 0, k4_failures = 0, gelfand_failures = 0;
    for (const auto &c : chains) {
        Json row{{"start_level", c.start_level}, {"units", chain_units_json(c)}};
        LimitIdealApprox approx;
        try {
            approx = chain_ideal_sequence(tower, c);
        } catch (const std::logic_error &ex) {
            ++containment_failures;
            violations.push_back(std::string("chain ") + to_string(c.units.front()) + ": " + ex.what());
            continue;
        }
        row["compat"] = approx.compat;
        row["standard_form"] = approx.standard_form;
        standard_form += approx.standard_form;
        if (sr && !approx.standard_form)
            violations.push_back("chain from " + to_string(c.units.front()) + " at level " +
                                 std::to_string(c.start_level) + " is not in standard form");
        if (wants("k4_limit") && approx.standard_form) {
            bool ok = true;
            for (int k = approx.start_level; k <= approx.end_level() && ok; ++k) {
                const auto &lat = cache.get(tower, k);
                std::size_t idx = lat.require_index(approx.at_level(k));
                auto key = std::make_pair(k, idx);
                auto it = k4_memo.find(key);
                if (it == k4_memo.end())
                    it = k4_memo.emplace(key, is_k4(idx, lat)).first;
                ok = it->second;
            }
            row["k4_limit"] = ok;
            if (!ok) {
                ++k4_failures;
                violations.push_back("chain ideal from " + to_string(c.units.front()) + " is not (K4)");
            }
        }
        if (wants("gelfand") && sr) {
            auto g = gelfand_restricted_order(tower, c);
            row["gelfand"] = Json{{"points", g.points.size()}, {"total", g.total}, {"transitive", g.transitive},
                                  {"monotone", g.monotone}};
            if (!(g.total && g.transitive && g.monotone)) {
                ++gelfand_failures;
                violations.push_back("Gelfand order of chain from " + to_string(c.units.front()) +
                                     " is not a monotone total order");
            }
        }
        if (wants("chains"))
            table.push_back(std::move(row));
    }

    Json report{{"schema_version", schema_version},
                {"command", "tower"},
                {"shapes", shapes},
                {"embeddings", embs},
                {"standard_refinement_components", sr}};
    if (wants("chains"))
        report["chains"] = std::move(table);
    report["summary"] = Json{{"chains", chains.size()},
                             {"standard_form", standard_form},
                             {"containment_failures", containment_failures},
                             {"k4_failures", k4_failures},
                             {"gelfand_failures", gelfand_failures}};

    if (wants("decompose")) {
        if (!sr)
            report["decomposition"] = Json{{"skipped", "tower has components that are neither standard nor refinement"}};
        else {
            const auto &top = cache.get(tower, tower.top_level());
            if (top.size() > limits.decompose_max_ideals)
                report["decomposition"] = Json{{"skipped", "top lattice has " + std::to_string(top.size()) + " ideals"}};
            else {
                std::size_t exact = 0, approximants = 0;
                for (const auto &j : top.ideals()) {
                    auto d = decompose_ideal(tower, standard_sequence_from_top(tower, j));
                    exact += d.exact;
                    approximants += d.approximants.size();
                }
                report["decomposition"] = Json{{"sequences", top.size()}, {"exact", exact}, {"approximants", approximants}};
                if (exact != top.size())
                    violations.push_back("some standard-form ideal sequence is not the intersection of its chain ideals");
            }
        }
    }
    report["violations"] = std::move(violations);
    return report;
}

/// 8x8 display of the counterexample: entry (r, c) carries the letter of
/// the T_4 unit whose image has a summand there, '.' otherwise.
inline std::vector<std::string> counterexample_display(const Embedding &emb)
{
    std::vector<std::string> rows(8, std::string(8, '.'));
    for (const auto &e : emb.source().units())
        for (const auto &f : emb.image(e))
            rows[static_cast<std::size_t>(f.row - 1)][static_cast<std::size_t>(f.col - 1)] = t4_entry_letter(e);
    return rows;
}

inline std::string excluded_letters(const Ideal &ideal)
{
    std::string s;
    for (const auto &e : ideal.excluded_units())
        s += t4_entry_letter(e);
    return s;
}

inline Json corner_pullbacks_json(const Embedding &emb)
{
    const MatrixUnit corner{1, 2, 3};
    Ideal i4 = Ideal::largest_excluding(emb.source(), corner);
    Json out = Json::array();
    for (const auto &g : emb.image(corner)) {
        Ideal pb = pullback_ideal(emb, Ideal::largest_excluding(emb.target(), g));
        out.push_back(Json{{"summand", to_json(g)},
                           {"excluded", excluded_letters(pb)},
                           {"equals_i4", pb == i4},
                           {"strictly_smaller", i4.includes(pb) && !(pb == i4)},
                           {"zero", pb.is_zero()}});
    }
    return out;
}

inline Json counterexample_report(const CommandLimits &limits = {})
{
    Embedding emb = amplified_refinement_counterexample();
    Ideal i4 = Ideal::largest_excluding(emb.source(), {1, 2, 3});
    Json tower = tower_report(Tower({emb}), {"chains"}, limits);
    return Json{{"schema_version", schema_version},
                {"command", "tower"},
                {"counterexample",
                 Json{{"strands", strands_json(emb)},
                      {"display", counterexample_display(emb)},
                      {"i4_excluded", excluded_letters(i4)},
                      {"pullbacks", corner_pullbacks_json(emb)}}},
                {"tower", std::move(tower)},
                {"violations", Json::array()}};
}

inline Json twist_search_report()
{
    auto space = two_strand_embeddings_t4_t8();
    auto witnesses = search_twisted_embeddings();
    Json list = Json::array();
    for (const auto &w : witnesses)
        list.push_back(Json{{"strands", strands_json(w)}, {"pullbacks", corner_pullbacks_json(w)}});
    Json violations = Json::array();
    if (witnesses.empty())
        violations.push_back("no two-strand embedding shows the twist behaviour; at least one was expected");
    return Json{{"schema_version", schema_version},
                {"command", "tower"},
                {"twist_search",
                 Json{{"space_size", space.size()}, {"witness_count", witnesses.size()}, {"witnesses", std::move(list)}}},
                {"violations", std::move(violations)}};
}

} // namespace triaf

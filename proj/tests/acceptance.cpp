// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "shapes.hpp"
#include "triaf/commands.hpp"

using namespace triaf;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

int failures = 0;

void criterion(int id, const char *title, double limit_s, const std::function<Outcome()> &body)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception &ex) {
        o.fail(std::string("exception: ") + ex.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && secs > limit_s)
        o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
    if (!o.pass)
        ++failures;
    std::printf("%s %2d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
}

std::vector<Ideal> prefix_ideals(const Tower &t, const Ideal &top) { return standard_sequence_from_top(t, top); }

} // namespace

int main()
{
    criterion(1, "4x4 ideal with zeros at (2,2),(2,3),(3,3) is (K4) and not prime", 1.0, [] {
        Outcome o;
        Shape t4{4};
        UnitSet m = t4.full_set();
        for (MatrixUnit e : {MatrixUnit{1, 2, 2}, MatrixUnit{1, 2, 3}, MatrixUnit{1, 3, 3}})
            m.reset(t4.index(e));
        Ideal i(t4, m);
        auto c = classify(i, enumerate_ideals(t4));
        if (!c.k4)
            o.fail("not (K4)");
        if (c.prime)
            o.fail("prime");
        if (!(i == Ideal::largest_excluding(t4, {1, 2, 3})))
            o.fail("not I(e23)");
        return o;
    });

    auto small_shapes = testing::shapes_up_to_dimension(5);

    criterion(2, "prime => (K4) => meet-irreducible for every ideal, dimension <= 5", 10.0, [&] {
        Outcome o;
        std::size_t checked = 0;
        for (const auto &s : small_shapes) {
            auto lattice = enumerate_ideals(s);
            auto cls = classify_all(lattice);
            for (std::size_t k = 0; k < lattice.size(); ++k) {
                ++checked;
                if (cls[k].prime && !cls[k].k4)
                    o.fail(s.describe() + ": prime but not (K4)");
                if (cls[k].k4 && !cls[k].meet_irreducible)
                    o.fail(s.describe() + ": (K4) but not meet-irreducible");
            }
        }
        o.detail = o.pass ? std::to_string(small_shapes.size()) + " shapes, " + std::to_string(checked) + " ideals" : o.detail;
        return o;
    });

    criterion(3, "distributivity and (K4) <=> meet-irreducible, dimension <= 5", 0, [&] {
        Outcome o;
        std::size_t triples = 0;
        for (const auto &s : small_shapes) {
            auto lattice = enumerate_ideals(s);
            const auto &ids = lattice.ideals();
            for (const auto &a : ids)
                for (const auto &b : ids)
                    for (const auto &c : ids) {
                        ++triples;
                        if (!(meet(a, join(b, c)) == join(meet(a, b), meet(a, c))) ||
                            !(join(a, meet(b, c)) == meet(join(a, b), join(a, c))))
                            o.fail(s.describe() + ": distributive law fails");
                    }
            auto cls = classify_all(lattice);
            for (std::size_t k = 0; k < lattice.size(); ++k)
                if (cls[k].k4 != cls[k].meet_irreducible)
                    o.fail(s.describe() + ": (K4) and meet-irreducible disagree");
        }
        o.detail = o.pass ? std::to_string(triples) + " triples" : o.detail;
        return o;
    });

    criterion(4, "quotient zero inherits meet-irreducible, (K4) and prime in T4", 0, [] {
        Outcome o;
        auto lattice = enumerate_ideals(Shape{4});
        auto cls = classify_all(lattice);
        for (std::size_t k = 0; k < lattice.size(); ++k) {
            const auto &c = cls[k];
            if (!(c.meet_irreducible || c.k4 || c.prime))
                continue;
            auto iv = interval_lattice(lattice[k], lattice);
            if (iv.bottom() != 0 || !(iv[0] == lattice[k]))
                o.fail("interval bottom is not the ideal");
            if (c.meet_irreducible && !is_meet_irreducible(0, iv))
                o.fail("meet-irreducible lost in quotient");
            if (c.k4 && !is_k4(0, iv))
                o.fail("(K4) lost in quotient");
            if (c.prime && !is_prime(0, iv))
                o.fail("prime lost in quotient");
        }
        return o;
    });

    criterion(5, "Kuratowski axioms and closed sets <-> ideals for T3 and T4", 0, [] {
        Outcome o;
        for (int n : {3, 4}) {
            Shape s{n};
            auto space = IdealSpace::of_meet_irreducibles(s);
            auto r = check_kuratowski(space, 12);
            if (r.mode != TopologyReport::Mode::exhaustive)
                o.fail("T" + std::to_string(n) + ": not exhaustive");
            if (!r.is_topology())
                o.fail("T" + std::to_string(n) + ": axiom fails");
            auto lattice = enumerate_ideals(s);
            auto b = closed_ideal_bijection(space, lattice);
            if (!b.holds || b.closed_set_count != lattice.size())
                o.fail("T" + std::to_string(n) + ": bijection fails");
            for (const auto &j : lattice.ideals())
                if (!(ker(hull(j, space), space) == j))
                    o.fail("T" + std::to_string(n) + ": ker(hull(I)) != I");
        }
        o.detail = o.pass ? "|Omega| = 6 and 10, ideals 14 and 42" : o.detail;
        return o;
    });

    criterion(6, "point closure is the set of smaller units; specialization anti-isomorphic to <=_p; not T1", 0, [] {
        Outcome o;
        Shape t4{4};
        auto space = IdealSpace::of_meet_irreducibles(t4);
        const auto &units = t4.units();
        for (std::size_t p = 0; p < units.size(); ++p) {
            auto cl = closure(space.singleton(p), space);
            for (std::size_t q = 0; q < units.size(); ++q)
                if (cl.test(q) != leq_p(t4, units[q], units[p]))
                    o.fail("closure of I" + to_string(units[p]) + " is wrong");
        }
        auto order = specialization_order(space);
        for (std::size_t p = 0; p < units.size(); ++p)
            for (std::size_t q = 0; q < units.size(); ++q)
                if (order(p, q) != leq_p(t4, units[p], units[q]))
                    o.fail("specialization order differs from <=_p");
        for (int n = 2; n <= 6; ++n)
            if (specialization_order(IdealSpace::of_meet_irreducibles(Shape{n})).is_t1())
                o.fail("T" + std::to_string(n) + " is T1");
        return o;
    });

    criterion(7, "chain ideals satisfy equality on standard/refinement towers and containment everywhere", 10.0, [] {
        Outcome o;
        std::size_t chains = 0;
        for (auto kind : {EmbeddingKind::standard, EmbeddingKind::refinement}) {
            auto t = uniform_tower(kind, Shape{2}, 2, 3);
            for (const auto &c : all_full_chains(t)) {
                ++chains;
                if (!chain_ideal_sequence(t, c).standard_form)
                    o.fail("equality fails on a chain from " + to_string(c.units.front()));
            }
        }
        std::vector<Embedding> others = two_strand_embeddings_t4_t8();
        others.push_back(amplified_refinement_counterexample());
        for (const auto &emb : others) {
            Tower t({emb});
            for (const auto &c : all_full_chains(t)) {
                ++chains;
                chain_ideal_sequence(t, c); // throws when containment fails
            }
        }
        o.detail = o.pass ? std::to_string(chains) + " chains" : o.detail;
        return o;
    });

    criterion(8, "counterexample display and corner pullbacks", 0, [] {
        Outcome o;
        auto emb = amplified_refinement_counterexample();
        const std::vector<std::string> expected{"ab..cd..", ".e..fg..", "..ab..cd", "...e..fg",
                                                "....hi..", ".....j..", "......hi", ".......j"};
        if (counterexample_display(emb) != expected)
            o.fail("display differs");
        Ideal i4 = Ideal::largest_excluding(emb.source(), {1, 2, 3});
        auto up = pullback_ideal(emb, Ideal::largest_excluding(emb.target(), {1, 2, 5}));
        auto lo = pullback_ideal(emb, Ideal::largest_excluding(emb.target(), {1, 4, 7}));
        if (excluded_letters(up) != "abefh")
            o.fail("pullback of I(e25) excludes " + excluded_letters(up));
        if (excluded_letters(lo) != "efhij")
            o.fail("pullback of I(e47) excludes " + excluded_letters(lo));
        for (const auto &p : {up, lo})
            if (!i4.includes(p) || p == i4)
                o.fail("pullback is not strictly inside I4");
        return o;
    });

    criterion(9, "standard-form sequences are intersections of chain ideals on the depth-3 refinement tower", 0, [] {
        Outcome o;
        auto t = uniform_tower(EmbeddingKind::refinement, Shape{2}, 2, 3);
        auto top = enumerate_ideals(t.shape(t.top_level()));
        for (const auto &j : top.ideals()) {
            auto seq = prefix_ideals(t, j);
            auto d = decompose_ideal(t, seq);
            if (!(d.level_intersections.back() == j))
                o.fail("top-level intersection differs");
        }
        o.detail = o.pass ? std::to_string(top.size()) + " sequences" : o.detail;
        return o;
    });

    criterion(10, "nest representations of T5: kernels and invariant prefix sets", 0, [] {
        Outcome o;
        Shape t5{5};
        for (const auto &e : t5.units()) {
            auto rep = compress(t5, e);
            if (!(kernel(rep) == Ideal::largest_excluding(t5, e)))
                o.fail("kernel of " + to_string(e));
            auto nest = invariant_subspace_nest(rep);
            auto len = static_cast<std::size_t>(e.col - e.row + 1);
            if (!nest.is_nest || nest.subspaces.size() != len + 1)
                o.fail("invariant subsets of " + to_string(e));
            for (std::size_t k = 0; k < nest.subspaces.size(); ++k) {
                std::vector<Label> prefix;
                for (int p = e.row; p < e.row + static_cast<int>(k); ++p)
                    prefix.push_back({1, p});
                if (nest.subspaces[k] != prefix)
                    o.fail("invariant subset of " + to_string(e) + " is not a prefix");
            }
        }
        return o;
    });

    criterion(11, "order on X' is total and transitive on depth-3 standard and refinement towers", 0, [] {
        Outcome o;
        std::size_t chains = 0;
        for (auto kind : {EmbeddingKind::standard, EmbeddingKind::refinement}) {
            auto t = uniform_tower(kind, Shape{2}, 2, 3);
            for (const auto &c : all_full_chains(t)) {
                ++chains;
                auto g = gelfand_restricted_order(t, c);
                if (!g.total || !g.transitive)
                    o.fail("chain from " + to_string(c.units.front()));
            }
        }
        o.detail = o.pass ? std::to_string(chains) + " chains" : o.detail;
        return o;
    });

    criterion(12, "twist search over the two-strand T4 -> T8 embeddings", 60.0, [] {
        Outcome o;
        auto a = twist_search_report();
        auto b = twist_search_report();
        if (a != b)
            o.fail("non-deterministic report");
        const auto &ts = a["twist_search"];
        if (ts["space_size"] != 35)
            o.fail("space size " + ts["space_size"].dump());
        if (ts["witness_count"] == 0)
            o.fail("no witnesses");
        std::string w;
        for (const auto &x : ts["witnesses"])
            w += (w.empty() ? "" : "; ") + x["strands"].dump();
        if (o.pass)
            o.detail = ts["witness_count"].dump() + " witness(es) of " + ts["space_size"].dump() + ": " + w;
        return o;
    });

    return failures == 0 ? 0 : 1;
}

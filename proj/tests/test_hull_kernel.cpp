#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "triaf/hull_kernel.hpp"

#include "shapes.hpp"

using namespace triaf;
using triaf::testing::shapes_up_to_dimension;

namespace {

std::size_t point_of(const Shape &s, const MatrixUnit &e) { return s.index(e); }

PointSet points(const IdealSpace &space, std::initializer_list<std::size_t> ids)
{
    PointSet p = space.none();
    for (auto i : ids)
        p.set(i);
    return p;
}

// Recomputes an axiom from its witness; true if the witness really violates it.
bool witness_violates(const std::string &axiom, const AxiomResult &a, const IdealSpace &space)
{
    if (axiom == "k1")
        return closure(space.none(), space).any();
    if (axiom == "k2")
        return !a.witness.at(0).is_subset_of(closure(a.witness[0], space));
    if (axiom == "k3")
        return !(closure(closure(a.witness.at(0), space), space) == closure(a.witness[0], space));
    const auto &f = a.witness.at(0);
    const auto &g = a.witness.at(1);
    return !(closure(f | g, space) == (closure(f, space) | closure(g, space)));
}

} // namespace

TEST(Ker, Examples)
{
    Shape t4{4};
    auto space = IdealSpace::of_meet_irreducibles(t4);
    auto f = points(space, {point_of(t4, {1, 2, 2}), point_of(t4, {1, 3, 3})});
    // intersection excludes exactly the two diagonal corners
    EXPECT_EQ(ker(f, space), meet(Ideal::largest_excluding(t4, {1, 2, 2}), Ideal::largest_excluding(t4, {1, 3, 3})));
    EXPECT_EQ(ker(f, space).excluded_units().size(), 2u);
    EXPECT_TRUE(ker(space.all(), space).is_zero());
    EXPECT_FALSE(ker(space.none(), space).is_proper());
}

TEST(Hull, Examples)
{
    Shape t4{4};
    auto space = IdealSpace::of_meet_irreducibles(t4);
    EXPECT_TRUE(hull(Ideal::full(t4), space).none());
    EXPECT_EQ(hull(Ideal::zero(t4), space), space.all());
    auto h = hull(Ideal::largest_excluding(t4, {1, 2, 3}), space);
    EXPECT_EQ(h, points(space, {point_of(t4, {1, 2, 2}), point_of(t4, {1, 2, 3}), point_of(t4, {1, 3, 3})}));
}

TEST(Closure, Examples)
{
    Shape t4{4};
    auto space = IdealSpace::of_meet_irreducibles(t4);
    auto c = closure(space.singleton(point_of(t4, {1, 2, 3})), space);
    EXPECT_EQ(c.count(), 3u);
    EXPECT_TRUE(closure(space.none(), space).none());
    EXPECT_EQ(closure(space.all(), space), space.all());
}

TEST(IdealSpace, Validation)
{
    Shape t2{2};
    EXPECT_THROW(IdealSpace(t2, {Ideal::full(t2)}), std::invalid_argument);
    EXPECT_THROW(IdealSpace(t2, {Ideal::zero(t2), Ideal::zero(t2)}), std::invalid_argument);
    EXPECT_THROW(IdealSpace(t2, {Ideal::zero(Shape{3})}), std::invalid_argument);
    EXPECT_NO_THROW(IdealSpace(t2, {Ideal::full(t2)}, false));
}

TEST(Kuratowski, MeetIrreduciblesOfT3)
{
    auto space = IdealSpace::of_meet_irreducibles(Shape{3});
    auto r = check_kuratowski(space);
    EXPECT_EQ(r.mode, TopologyReport::Mode::exhaustive);
    EXPECT_TRUE(r.is_topology());
}

TEST(Kuratowski, EmptySpaceIsVacuous)
{
    IdealSpace space(Shape{2}, {});
    auto r = check_kuratowski(space);
    EXPECT_TRUE(r.is_topology());
}

// The three corner ideals are all of the form I(e), so K4 holds.
TEST(Kuratowski, CornerAndDiagonalPointsPass)
{
    Shape t4{4};
    IdealSpace space(t4, {Ideal::largest_excluding(t4, {1, 2, 3}), Ideal::largest_excluding(t4, {1, 2, 2}),
                          Ideal::largest_excluding(t4, {1, 3, 3})});
    EXPECT_TRUE(check_kuratowski(space).is_topology());
}

// A point that is the intersection of two others breaks K4.
TEST(Kuratowski, CompositePointFailsK4)
{
    Shape t4{4};
    auto i22 = Ideal::largest_excluding(t4, {1, 2, 2});
    auto i33 = Ideal::largest_excluding(t4, {1, 3, 3});
    IdealSpace space(t4, {meet(i22, i33), i22, i33});
    auto r = check_kuratowski(space);
    EXPECT_TRUE(r.k1.holds && r.k2.holds && r.k3.holds);
    ASSERT_FALSE(r.k4.holds);
    ASSERT_EQ(r.k4.witness.size(), 2u);
    EXPECT_TRUE(witness_violates("k4", r.k4, space));
    EXPECT_EQ(r.k4.witness[0], space.singleton(1));
    EXPECT_EQ(r.k4.witness[1], space.singleton(2));
}

TEST(Kuratowski, ImproperPointBreaksK1)
{
    Shape t3{3};
    auto pts = meet_irreducibles(t3);
    pts.push_back(Ideal::full(t3));
    IdealSpace space(t3, pts, false);
    auto r = check_kuratowski(space);
    EXPECT_FALSE(r.k1.holds);
    EXPECT_TRUE(witness_violates("k1", r.k1, space));
    EXPECT_TRUE(r.k2.holds && r.k3.holds);
}

TEST(Kuratowski, CriterionModeForLargeSpaces)
{
    auto space = IdealSpace::of_meet_irreducibles(Shape{5});
    auto r = check_kuratowski(space);
    EXPECT_EQ(r.mode, TopologyReport::Mode::criterion);
    EXPECT_TRUE(r.is_topology());

    Shape t5{5};
    auto pts = meet_irreducibles(t5);
    pts.push_back(meet(pts[0], pts[5])); // a non-(K4) ideal
    auto bad = check_kuratowski(IdealSpace(t5, pts));
    EXPECT_EQ(bad.mode, TopologyReport::Mode::criterion);
    EXPECT_FALSE(bad.k4.holds);
}

// K2, K3 and the easy half of K4 hold for any family of proper ideals; the
// exhaustive K4 result agrees with the per-point kernel criterion; and the
// all-points-(K4) criterion is sufficient.
TEST(Kuratowski, RandomFamiliesProperties)
{
    std::mt19937 rng(12345);
    for (const auto &s : shapes_up_to_dimension(4)) {
        auto lattice = enumerate_ideals(s);
        std::vector<Ideal> proper;
        for (const auto &i : lattice.ideals())
            if (i.is_proper())
                proper.push_back(i);
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<Ideal> pts;
            for (const auto &i : proper)
                if (rng() % 3 == 0 && pts.size() < 8)
                    pts.push_back(i);
            IdealSpace space(s, pts);
            auto r = check_kuratowski(space);
            EXPECT_TRUE(r.k1.holds);
            EXPECT_TRUE(r.k2.holds);
            EXPECT_TRUE(r.k3.holds);
            for (std::size_t f = 0; f < (std::size_t{1} << pts.size()); f += 3)
                for (std::size_t g = 0; g < (std::size_t{1} << pts.size()); g += 5) {
                    auto F = PointSet::from_word(pts.size(), f), G = PointSet::from_word(pts.size(), g);
                    EXPECT_TRUE((closure(F, space) | closure(G, space)).is_subset_of(closure(F | G, space)));
                }
            EXPECT_EQ(r.k4.holds, kernel_pair_criterion(space));
            bool all_k4 = true;
            for (const auto &p : pts)
                all_k4 = all_k4 && is_k4(lattice.require_index(p), lattice);
            if (all_k4) {
                EXPECT_TRUE(r.k4.holds);
            }
            if (!r.k4.holds) {
                EXPECT_TRUE(witness_violates("k4", r.k4, space));
            }
        }
    }
}

TEST(Bijection, ClosedSetsMatchIdeals)
{
    struct Case
    {
        Shape shape;
        std::size_t count;
    };
    for (const auto &c : {Case{Shape{3}, 14}, Case{Shape{4}, 42}, Case{Shape{2, 2}, 25}}) {
        auto space = IdealSpace::of_meet_irreducibles(c.shape);
        auto r = closed_ideal_bijection(space, enumerate_ideals(c.shape));
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.ideal_count, c.count);
        EXPECT_EQ(r.closed_set_count, c.count);
    }
}

TEST(Bijection, FailsForTooFewPoints)
{
    Shape t3{3};
    auto pts = meet_irreducibles(t3);
    pts.pop_back();
    auto r = closed_ideal_bijection(IdealSpace(t3, pts), enumerate_ideals(t3));
    EXPECT_FALSE(r.holds);
    EXPECT_TRUE(r.failing_ideal.has_value());
}

TEST(Specialization, MatchesLeqP)
{
    Shape t2{2};
    auto space = IdealSpace::of_meet_irreducibles(t2);
    auto order = specialization_order(space);
    EXPECT_TRUE(order(point_of(t2, {1, 1, 1}), point_of(t2, {1, 1, 2})));

    for (Shape s : {Shape{3}, Shape{2, 2}, Shape{4}}) {
        auto sp = IdealSpace::of_meet_irreducibles(s);
        auto o = specialization_order(sp);
        for (std::size_t p = 0; p < sp.size(); ++p) {
            for (std::size_t q = 0; q < sp.size(); ++q)
                EXPECT_EQ(o(p, q), leq_p(s, s.unit(p), s.unit(q)));
            if (s.unit(p).is_diagonal()) {
                EXPECT_EQ(closure(sp.singleton(p), sp), sp.singleton(p)); // closed point
            }
        }
        EXPECT_FALSE(o.is_t1());
    }
    EXPECT_TRUE(specialization_order(IdealSpace::of_meet_irreducibles(Shape{1, 1, 1})).is_t1());
}

// closure(F) = { f : f <=_p e for some e in F }
TEST(Closure, WedgeFormula)
{
    std::mt19937 rng(7);
    for (Shape s : {Shape{3}, Shape{4}, Shape{2, 3}}) {
        auto space = IdealSpace::of_meet_irreducibles(s);
        for (int trial = 0; trial < 40; ++trial) {
            PointSet f = space.none();
            for (std::size_t p = 0; p < space.size(); ++p)
                if (rng() % 4 == 0)
                    f.set(p);
            PointSet expect = space.none();
            f.for_each([&](std::size_t e) { expect |= s.down_set(e); });
            EXPECT_EQ(closure(f, space), expect);
        }
    }
}

#pragma once

// Hull-kernel closure on a finite set of ideals, the Kuratowski axiom check,
// and the closed-set / ideal correspondence.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "triaf/lattice.hpp"

namespace triaf {

/// Subset of the points of an IdealSpace, by point index.
using PointSet = BitSet;

/// A finite set Omega of ideals of one shape.
class IdealSpace
{
public:
    IdealSpace(Shape shape, std::vector<Ideal> points, bool require_proper = true)
        : shape_(std::move(shape)), points_(std::move(points))
    {
        for (std::size_t a = 0; a < points_.size(); ++a) {
            if (!(points_[a].shape() == shape_))
                throw std::invalid_argument("point of a different shape");
            if (require_proper && !points_[a].is_proper())
                throw std::invalid_argument("points of an ideal space must be proper ideals");
            for (std::size_t b = 0; b < a; ++b)
                if (points_[a] == points_[b])
                    throw std::invalid_argument("duplicate point " + std::to_string(a));
        }
    }

    /// Omega = the meet-irreducible ideals I(e), indexed like the units.
    static IdealSpace of_meet_irreducibles(const Shape &shape) { return IdealSpace(shape, meet_irreducibles(shape)); }

    const Shape &shape() const noexcept { return shape_; }
    const std::vector<Ideal> &points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

    PointSet none() const { return PointSet(points_.size()); }
    PointSet all() const { return PointSet::full(points_.size()); }
    PointSet singleton(std::size_t p) const
    {
        PointSet s(points_.size());
        s.set(p);
        return s;
    }

private:
    Shape shape_;
    std::vector<Ideal> points_;
};

/// Intersection of the points in F; the empty family gives the full algebra.
inline Ideal ker(const PointSet &f, const IdealSpace &space)
{
    UnitSet m = space.shape().full_set();
    f.for_each([&](std::size_t p) { m &= space.points()[p].members(); });
    return Ideal(space.shape(), std::move(m));
}

/// Points that contain `ideal`.
inline PointSet hull(const Ideal &ideal, const IdealSpace &space)
{
    PointSet h = space.none();
    for (std::size_t p = 0; p < space.size(); ++p)
        if (space.points()[p].includes(ideal))
            h.set(p);
    return h;
}

inline PointSet closure(const PointSet &f, const IdealSpace &space) { return hull(ker(f, space), space); }

struct AxiomResult
{
    bool holds = true;
    /// Sets violating the axiom: {} for K1, {F} for K2/K3, {F, G} for K4.
    std::vector<PointSet> witness;
};

struct TopologyReport
{
    enum class Mode { exhaustive, criterion };

    Mode mode = Mode::exhaustive;
    AxiomResult k1, k2, k3, k4;

    bool is_topology() const noexcept { return k1.holds && k2.holds && k3.holds && k4.holds; }
};

inline const char *to_string(TopologyReport::Mode m)
{
    return m == TopologyReport::Mode::exhaustive ? "exhaustive" : "criterion";
}

namespace detail {

/// Closure of every subset of a small space, as bit masks over points.
struct SubsetClosures
{
    std::vector<UnitSet> kers;
    std::vector<std::uint32_t> closures;
};

inline SubsetClosures all_subset_closures(const IdealSpace &space)
{
    std::size_t n = space.size();
    std::size_t count = std::size_t{1} << n;
    SubsetClosures sc;
    sc.kers.reserve(count);
    sc.kers.push_back(space.shape().full_set());
    for (std::size_t s = 1; s < count; ++s) {
        auto low = static_cast<std::size_t>(std::countr_zero(s));
        sc.kers.push_back(sc.kers[s & (s - 1)] & space.points()[low].members());
    }
    sc.closures.resize(count);
    for (std::size_t s = 0; s < count; ++s) {
        std::uint32_t c = 0;
        for (std::size_t p = 0; p < n; ++p)
            if (sc.kers[s].is_subset_of(space.points()[p].members()))
                c |= std::uint32_t{1} << p;
        sc.closures[s] = c;
    }
    return sc;
}

inline PointSet mask_to_points(std::size_t n, std::uint64_t mask) { return PointSet::from_word(n, mask); }

} // namespace detail

/// Checks the four Kuratowski axioms for hull-kernel closure on `space`.
///
/// Spaces with at most `exhaustive_cap` points are checked over every subset
/// (and every pair of subsets for K4). Larger spaces fall back to the
/// sufficient criterion that every point is (K4) in the full ideal lattice;
/// K2, K3 hold for any family of ideals and are reported as holding.
inline TopologyReport check_kuratowski(const IdealSpace &space, std::size_t exhaustive_cap = 12,
                                       const EnumerationLimits &limits = {})
{
    TopologyReport r;
    std::size_t n = space.size();

    PointSet c0 = closure(space.none(), space);
    if (c0.any()) {
        r.k1.holds = false;
        r.k1.witness = {space.none()};
    }

    if (n <= exhaustive_cap && n < 32) {
        r.mode = TopologyReport::Mode::exhaustive;
        auto sc = detail::all_subset_closures(space);
        std::size_t count = std::size_t{1} << n;
        for (std::size_t f = 0; f < count; ++f) {
            std::uint32_t cf = sc.closures[f];
            if (r.k2.holds && (f & ~std::size_t{cf}) != 0) {
                r.k2.holds = false;
                r.k2.witness = {detail::mask_to_points(n, f)};
            }
            if (r.k3.holds && sc.closures[cf] != cf) {
                r.k3.holds = false;
                r.k3.witness = {detail::mask_to_points(n, f)};
            }
            if (!r.k4.holds)
                continue;
            for (std::size_t g = 0; g < count; ++g) {
                if (sc.closures[f | g] != (cf | sc.closures[g])) {
                    r.k4.holds = false;
                    r.k4.witness = {detail::mask_to_points(n, f), detail::mask_to_points(n, g)};
                    break;
                }
            }
        }
        return r;
    }

    r.mode = TopologyReport::Mode::criterion;
    IdealLattice lattice = enumerate_ideals(space.shape(), limits);
    for (std::size_t p = 0; p < n; ++p) {
        if (!is_k4(lattice.require_index(space.points()[p]), lattice)) {
            r.k4.holds = false;
            r.k4.witness = {space.singleton(p)};
            break;
        }
    }
    return r;
}

/// The per-point condition equivalent to K4: for every point I and subsets
/// F, G, I >= ker F meet ker G implies I >= ker F or I >= ker G.
/// Exhaustive; limited to small spaces.
inline bool kernel_pair_criterion(const IdealSpace &space, std::size_t cap = 12)
{
    if (space.size() > cap)
        throw CapExceeded("kernel pair criterion limited to " + std::to_string(cap) + " points");
    auto sc = detail::all_subset_closures(space);
    std::size_t count = sc.kers.size();
    for (const auto &pt : space.points()) {
        const UnitSet &i = pt.members();
        for (std::size_t f = 0; f < count; ++f) {
            if (sc.kers[f].is_subset_of(i))
                continue;
            for (std::size_t g = 0; g < count; ++g)
                if (!sc.kers[g].is_subset_of(i) && BitSet::meet_is_subset_of(sc.kers[f], sc.kers[g], i))
                    return false;
        }
    }
    return true;
}

struct BijectionReport
{
    bool holds = true;
    std::size_t ideal_count = 0;
    std::size_t closed_set_count = 0;
    /// Lattice index of an ideal J with ker(hull(J)) != J, if any.
    std::optional<std::size_t> failing_ideal;
    /// The closed sets, as the image of hull over the lattice (lattice order).
    std::vector<PointSet> closed_sets;
};

/// Verifies ker(hull(J)) = J for every ideal and hull(ker(F)) = F for every
/// closed set F, and that the two families have the same size.
inline BijectionReport closed_ideal_bijection(const IdealSpace &space, const IdealLattice &lattice)
{
    BijectionReport r;
    r.ideal_count = lattice.size();
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t k = 0; k < lattice.size(); ++k) {
        PointSet f = hull(lattice[k], space);
        if (!(ker(f, space) == lattice[k]) && !r.failing_ideal) {
            r.holds = false;
            r.failing_ideal = k;
        }
        if (seen.insert(f.indices()).second)
            r.closed_sets.push_back(f);
    }
    for (const auto &f : r.closed_sets)
        if (!(closure(f, space) == f))
            r.holds = false;
    r.closed_set_count = r.closed_sets.size();
    if (r.closed_set_count != r.ideal_count)
        r.holds = false;
    return r;
}

/// p ~> q iff p lies in the closure of {q}. Reflexive.
class SpecializationOrder
{
public:
    explicit SpecializationOrder(const IdealSpace &space) : n_(space.size()), rel_(n_ * n_, 0)
    {
        for (std::size_t q = 0; q < n_; ++q) {
            PointSet c = closure(space.singleton(q), space);
            c.for_each([&](std::size_t p) { rel_[p * n_ + q] = 1; });
        }
    }

    std::size_t size() const noexcept { return n_; }
    bool operator()(std::size_t p, std::size_t q) const { return rel_.at(p * n_ + q) != 0; }

    /// Pairs p != q with p ~> q and no intermediate point.
    std::vector<std::pair<std::size_t, std::size_t>> cover_edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q) {
                if (p == q || !(*this)(p, q))
                    continue;
                bool direct = true;
                for (std::size_t m = 0; m < n_ && direct; ++m)
                    if (m != p && m != q && (*this)(p, m) && (*this)(m, q))
                        direct = false;
                if (direct)
                    out.emplace_back(p, q);
            }
        return out;
    }

    /// T1 iff every singleton is closed.
    bool is_t1() const noexcept
    {
        for (std::size_t p = 0; p < n_; ++p)
            for (std::size_t q = 0; q < n_; ++q)
                if (p != q && rel_[p * n_ + q])
                    return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<char> rel_;
};

inline SpecializationOrder specialization_order(const IdealSpace &space) { return SpecializationOrder(space); }

} // namespace triaf

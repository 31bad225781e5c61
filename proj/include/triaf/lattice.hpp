#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "triaf/ideal.hpp"

namespace triaf {

/// Thrown when an exhaustive computation would exceed its configured size cap.
class CapExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationLimits
{
    /// Shapes with at most this many units are enumerated by filtering all
    /// 2^U unit subsets; larger shapes use per-block staircase products.
    std::size_t subset_filter_max_units = 20;
    std::size_t max_ideals = 2'000'000;
};

struct Classification
{
    bool prime = false;
    bool k4 = false;
    bool meet_irreducible = false;
    bool maximal = false;
    bool primary = false;

    friend bool operator==(const Classification &, const Classification &) = default;
};

/// A finite family of ideals of one shape that is closed under meet and
/// join: either the full ideal lattice of the shape or an interval [I, top]
/// of it. Ideals are kept in a deterministic order (by size, then bits).
class IdealLattice
{
public:
    IdealLattice(Shape shape, std::vector<Ideal> ideals) : shape_(std::move(shape)), ideals_(std::move(ideals))
    {
        if (ideals_.empty())
            throw std::invalid_argument("a lattice needs at least one ideal");
        for (const auto &i : ideals_)
            if (!(i.shape() == shape_))
                throw std::invalid_argument("ideal of a different shape in lattice");
        std::sort(ideals_.begin(), ideals_.end());
        ideals_.erase(std::unique(ideals_.begin(), ideals_.end()), ideals_.end());
        lookup_.reserve(ideals_.size());
        for (std::size_t k = 0; k < ideals_.size(); ++k)
            lookup_.emplace(ideals_[k].members(), k);
        bottom_ = 0;
        top_ = ideals_.size() - 1;
        for (const auto &i : ideals_)
            if (!i.includes(ideals_[bottom_]) || !ideals_[top_].includes(i))
                throw std::invalid_argument("ideal family has no least or greatest element");
        build_covers();
    }

    const Shape &shape() const noexcept { return shape_; }
    const std::vector<Ideal> &ideals() const noexcept { return ideals_; }
    const Ideal &operator[](std::size_t k) const { return ideals_.at(k); }
    std::size_t size() const noexcept { return ideals_.size(); }

    std::size_t bottom() const noexcept { return bottom_; }
    std::size_t top() const noexcept { return top_; }

    std::optional<std::size_t> index_of(const Ideal &i) const
    {
        auto it = lookup_.find(i.members());
        if (it == lookup_.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t require_index(const Ideal &i) const
    {
        auto k = index_of(i);
        if (!k)
            throw std::invalid_argument("ideal is not a member of the lattice");
        return *k;
    }

    /// Upper covers of ideal k in the Hasse diagram.
    const std::vector<std::size_t> &covers(std::size_t k) const { return covers_.at(k); }

    std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t k = 0; k < ideals_.size(); ++k)
            for (auto c : covers_[k])
                out.emplace_back(k, c);
        return out;
    }

    /// Ideals covered only by the top element (proper ones only).
    std::vector<std::size_t> maximal_ideals() const
    {
        std::vector<std::size_t> out;
        for (std::size_t k = 0; k < ideals_.size(); ++k)
            if (k != top_ && covers_[k].size() == 1 && covers_[k][0] == top_)
                out.push_back(k);
        return out;
    }

private:
    // In a lattice of up-sets, J < K is a cover iff K = J + {u} for a single
    // unit u, so covers are found by single-unit extension.
    void build_covers()
    {
        covers_.assign(ideals_.size(), {});
        for (std::size_t k = 0; k < ideals_.size(); ++k) {
            UnitSet m = ideals_[k].members();
            m.complement().for_each([&](std::size_t u) {
                m.set(u);
                auto it = lookup_.find(m);
                if (it != lookup_.end())
                    covers_[k].push_back(it->second);
                m.reset(u);
            });
            std::sort(covers_[k].begin(), covers_[k].end());
        }
    }

    Shape shape_;
    std::vector<Ideal> ideals_;
    std::unordered_map<UnitSet, std::size_t, BitSetHash> lookup_;
    std::vector<std::vector<std::size_t>> covers_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
};

namespace detail {

inline void staircases_for_block(int n, std::vector<int> &cur, std::vector<std::vector<int>> &out)
{
    auto j = static_cast<int>(cur.size()); // next column is j+1
    if (j == n) {
        out.push_back(cur);
        return;
    }
    int lo = cur.empty() ? 0 : cur.back();
    for (int h = lo; h <= j + 1; ++h) {
        cur.push_back(h);
        staircases_for_block(n, cur, out);
        cur.pop_back();
    }
}

/// Number of staircases of a block of size n (saturating at `cap + 1`).
inline std::size_t staircase_count(int n, std::size_t cap)
{
    // ways[h] = number of valid prefixes ending at height h
    std::vector<std::size_t> ways(static_cast<std::size_t>(n) + 1, 0);
    ways[0] = 1;
    ways[1] = 1;
    for (int j = 2; j <= n; ++j) {
        std::vector<std::size_t> next(ways.size(), 0);
        std::size_t run = 0;
        for (int h = 0; h <= j; ++h) {
            run = std::min(run + ways[static_cast<std::size_t>(h)], cap + 1);
            next[static_cast<std::size_t>(h)] = run;
        }
        ways = std::move(next);
    }
    std::size_t total = 0;
    for (auto w : ways)
        total = std::min(total + w, cap + 1);
    return total;
}

} // namespace detail

/// Number of ideals of `shape`, saturating at cap + 1.
inline std::size_t count_ideals(const Shape &shape, std::size_t cap)
{
    std::size_t total = 1;
    for (int n : shape.blocks()) {
        std::size_t c = detail::staircase_count(n, cap);
        total = (c != 0 && total > (cap + 1) / c) ? cap + 1 : std::min(total * c, cap + 1);
    }
    return total;
}

/// All ideals, by filtering every unit subset for up-closedness.
inline std::vector<Ideal> ideals_by_subset_filter(const Shape &shape, std::size_t max_units = 20)
{
    std::size_t u = shape.unit_count();
    if (u > max_units || u > 30)
        throw CapExceeded("subset filter limited to " + std::to_string(max_units) + " units; shape " +
                          shape.describe() + " has " + std::to_string(u));
    std::vector<std::uint64_t> up(u);
    for (std::size_t i = 0; i < u; ++i)
        up[i] = shape.up_set(i).word(0);
    std::vector<Ideal> out;
    std::uint64_t limit = std::uint64_t{1} << u;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool closed = true;
        for (std::uint64_t w = mask; w && closed; w &= w - 1)
            closed = (up[static_cast<std::size_t>(std::countr_zero(w))] & ~mask) == 0;
        if (closed)
            out.emplace_back(shape, UnitSet::from_word(u, mask));
    }
    return out;
}

/// All ideals, as products of per-block staircase profiles.
inline std::vector<Ideal> ideals_by_staircases(const Shape &shape, std::size_t max_ideals = 2'000'000)
{
    if (count_ideals(shape, max_ideals) > max_ideals)
        throw CapExceeded("shape " + shape.describe() + " has more than " + std::to_string(max_ideals) + " ideals");
    std::vector<std::vector<std::vector<int>>> per_block;
    for (int n : shape.blocks()) {
        std::vector<std::vector<int>> s;
        std::vector<int> cur;
        detail::staircases_for_block(n, cur, s);
        per_block.push_back(std::move(s));
    }
    std::vector<Ideal> out;
    std::vector<std::size_t> pick(per_block.size(), 0);
    for (;;) {
        StaircaseProfile p;
        for (std::size_t b = 0; b < per_block.size(); ++b)
            p.heights.push_back(per_block[b][pick[b]]);
        out.push_back(ideal_from_staircase(shape, p));
        std::size_t b = per_block.size();
        while (b > 0) {
            --b;
            if (++pick[b] < per_block[b].size())
                break;
            pick[b] = 0;
            if (b == 0)
                return out;
        }
    }
}

inline IdealLattice enumerate_ideals(const Shape &shape, const EnumerationLimits &limits = {})
{
    if (shape.unit_count() <= limits.subset_filter_max_units)
        return IdealLattice(shape, ideals_by_subset_filter(shape, limits.subset_filter_max_units));
    return IdealLattice(shape, ideals_by_staircases(shape, limits.max_ideals));
}

/// The interval [I, top], modelling the ideal lattice of the quotient A/I;
/// I is its zero.
inline IdealLattice interval_lattice(const Ideal &bottom, const IdealLattice &lattice)
{
    lattice.require_index(bottom);
    std::vector<Ideal> above;
    for (const auto &j : lattice.ideals())
        if (j.includes(bottom))
            above.push_back(j);
    return IdealLattice(lattice.shape(), std::move(above));
}

/// (K4) for ideal k: I >= J meet K implies I >= J or I >= K.
inline bool is_k4(std::size_t k, const IdealLattice &lattice)
{
    if (k == lattice.top())
        return false;
    const UnitSet &i = lattice[k].members();
    std::vector<const UnitSet *> outside;
    for (const auto &j : lattice.ideals())
        if (!j.members().is_subset_of(i))
            outside.push_back(&j.members());
    for (std::size_t a = 0; a < outside.size(); ++a)
        for (std::size_t b = a; b < outside.size(); ++b)
            if (BitSet::meet_is_subset_of(*outside[a], *outside[b], i))
                return false;
    return true;
}

inline bool is_prime(std::size_t k, const IdealLattice &lattice)
{
    if (k == lattice.top())
        return false;
    const Ideal &i = lattice[k];
    std::vector<const Ideal *> outside;
    for (const auto &j : lattice.ideals())
        if (!i.includes(j))
            outside.push_back(&j);
    for (const auto *j : outside)
        for (const auto *l : outside)
            if (i.includes(product(*j, *l)))
                return false;
    return true;
}

inline bool is_meet_irreducible(std::size_t k, const IdealLattice &lattice)
{
    if (k == lattice.top())
        return false;
    const UnitSet &i = lattice[k].members();
    std::vector<const UnitSet *> above;
    for (const auto &j : lattice.ideals())
        if (i.is_subset_of(j.members()) && !(i == j.members()))
            above.push_back(&j.members());
    for (std::size_t a = 0; a < above.size(); ++a)
        for (std::size_t b = a; b < above.size(); ++b)
            if ((*above[a] & *above[b]) == i)
                return false;
    return true;
}

namespace detail {
inline void fill_maximal_primary(const IdealLattice &lattice, std::size_t k, Classification &c)
{
    if (k == lattice.top())
        return;
    auto maxes = lattice.maximal_ideals();
    c.maximal = std::find(maxes.begin(), maxes.end(), k) != maxes.end();
    std::size_t above = 0;
    for (auto m : maxes)
        if (lattice[m].includes(lattice[k]))
            ++above;
    c.primary = above == 1;
}
} // namespace detail

/// Classification of a proper ideal from the definitions, relative to every
/// ideal of `lattice`. The improper ideal gets all flags false.
inline Classification classify(const Ideal &ideal, const IdealLattice &lattice)
{
    std::size_t k = lattice.require_index(ideal);
    Classification c;
    if (k == lattice.top())
        return c;
    c.prime = is_prime(k, lattice);
    c.k4 = is_k4(k, lattice);
    c.meet_irreducible = is_meet_irreducible(k, lattice);
    detail::fill_maximal_primary(lattice, k, c);
    return c;
}

/// Same as classify() for every ideal, sharing the pair loops.
inline std::vector<Classification> classify_all(const IdealLattice &lattice)
{
    std::size_t n = lattice.size();
    std::vector<Classification> out(n);
    std::vector<char> prime(n, 1), k4(n, 1), mi(n, 1);
    const auto &ids = lattice.ideals();
    for (std::size_t a = 0; a < n; ++a) {
        const UnitSet &ja = ids[a].members();
        for (std::size_t b = 0; b < n; ++b) {
            const UnitSet &kb = ids[b].members();
            UnitSet m = ja & kb;
            UnitSet p = product(ids[a], ids[b]).members();
            for (std::size_t i = 0; i < n; ++i) {
                const UnitSet &ii = ids[i].members();
                if (ja.is_subset_of(ii) || kb.is_subset_of(ii))
                    continue;
                if (m.is_subset_of(ii))
                    k4[i] = 0;
                if (p.is_subset_of(ii))
                    prime[i] = 0;
            }
            if (a < b && !(m == ja) && !(m == kb)) {
                auto idx = lattice.index_of(Ideal(lattice.shape(), m));
                if (idx)
                    mi[*idx] = 0;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (k == lattice.top())
            continue;
        out[k].prime = prime[k];
        out[k].k4 = k4[k];
        out[k].meet_irreducible = mi[k];
        detail::fill_maximal_primary(lattice, k, out[k]);
    }
    return out;
}

/// The meet-irreducible ideals of a shape: one I(e) per matrix unit, in
/// canonical unit order.
inline std::vector<Ideal> meet_irreducibles(const Shape &shape)
{
    std::vector<Ideal> out;
    out.reserve(shape.unit_count());
    for (const auto &e : shape.units())
        out.push_back(Ideal::largest_excluding(shape, e));
    return out;
}

} // namespace triaf

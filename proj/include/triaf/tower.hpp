#pragma once

// Towers A_0 -> A_1 -> ... -> A_N of strand embeddings, matrix-unit chains,
// and the ideal sequences I_k = I(e^k) they determine.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "triaf/embedding.hpp"
#include "triaf/lattice.hpp"

namespace triaf {

class Tower
{
public:
    /// A single-level tower with no embeddings.
    explicit Tower(const Shape &base) : shapes_{base.with_level(0)} {}

    explicit Tower(std::vector<Embedding> maps) : maps_(std::move(maps))
    {
        if (maps_.empty())
            throw std::invalid_argument("tower needs at least one embedding; use Tower(Shape) for one level");
        shapes_.push_back(maps_.front().source().with_level(0));
        for (std::size_t k = 0; k < maps_.size(); ++k) {
            if (!(maps_[k].source() == shapes_.back()))
                throw std::invalid_argument("embedding " + std::to_string(k) + " source " +
                                            maps_[k].source().describe() + " does not match level shape " +
                                            shapes_.back().describe());
            shapes_.push_back(maps_[k].target().with_level(static_cast<int>(k) + 1));
        }
    }

    std::size_t levels() const noexcept { return shapes_.size(); }
    int top_level() const noexcept { return static_cast<int>(shapes_.size()) - 1; }
    const Shape &shape(int level) const { return shapes_.at(static_cast<std::size_t>(level)); }
    const std::vector<Shape> &shapes() const noexcept { return shapes_; }
    /// The embedding A_level -> A_{level+1}.
    const Embedding &map(int level) const { return maps_.at(static_cast<std::size_t>(level)); }
    const std::vector<Embedding> &maps() const noexcept { return maps_; }

    /// Every non-zero component of every embedding is standard or refinement.
    bool has_standard_refinement_components() const
    {
        for (const auto &m : maps_)
            if (!triaf::has_standard_refinement_components(m))
                return false;
        return true;
    }

private:
    std::vector<Shape> shapes_;
    std::vector<Embedding> maps_;
};

enum class EmbeddingKind { standard, refinement };

/// base -> m.base -> m^2.base -> ... with `levels` levels, all maps of one kind.
inline Tower uniform_tower(EmbeddingKind kind, const Shape &base, int multiplicity, int levels)
{
    if (levels < 1)
        throw std::invalid_argument("a tower has at least one level");
    if (levels == 1)
        return Tower(base);
    std::vector<Embedding> maps;
    Shape cur = base;
    for (int k = 1; k < levels; ++k) {
        std::vector<int> next;
        for (int n : cur.blocks())
            next.push_back(n * multiplicity);
        Shape nxt(next, k);
        maps.push_back(kind == EmbeddingKind::standard ? standard_embedding(cur, nxt, multiplicity)
                                                       : refinement_embedding(cur, nxt, multiplicity));
        cur = nxt;
    }
    return Tower(std::move(maps));
}

/// e^{k0} -> e^{k0+1} -> ... : each unit is a summand of the image of the
/// previous one.
struct UnitChain
{
    int start_level = 0;
    std::vector<MatrixUnit> units;

    int end_level() const noexcept { return start_level + static_cast<int>(units.size()) - 1; }
    const MatrixUnit &at_level(int level) const { return units.at(static_cast<std::size_t>(level - start_level)); }

    friend bool operator==(const UnitChain &, const UnitChain &) = default;
};

inline void validate_chain(const Tower &tower, const UnitChain &chain)
{
    if (chain.units.empty())
        throw std::invalid_argument("empty chain");
    if (chain.start_level < 0 || chain.end_level() > tower.top_level())
        throw std::invalid_argument("chain levels outside the tower");
    for (int k = chain.start_level; k <= chain.end_level(); ++k) {
        tower.shape(k).require(chain.at_level(k));
        if (k == chain.start_level)
            continue;
        auto img = tower.map(k - 1).image(chain.at_level(k - 1));
        if (std::find(img.begin(), img.end(), chain.at_level(k)) == img.end())
            throw std::invalid_argument("chain unit " + to_string(chain.at_level(k)) + " at level " +
                                        std::to_string(k) + " is not a summand of " +
                                        to_string(chain.at_level(k - 1)));
    }
}

/// One extension per summand of the last unit's image, in strand order.
inline std::vector<UnitChain> chain_extensions(const Tower &tower, const UnitChain &chain)
{
    validate_chain(tower, chain);
    if (chain.end_level() >= tower.top_level())
        throw std::invalid_argument("chain already reaches the top of the tower");
    std::vector<UnitChain> out;
    for (const auto &f : tower.map(chain.end_level()).image(chain.units.back())) {
        UnitChain c = chain;
        c.units.push_back(f);
        out.push_back(std::move(c));
    }
    return out;
}

/// All chains from `unit` at `start_level` extended to the top level.
inline std::vector<UnitChain> full_chains_from(const Tower &tower, int start_level, const MatrixUnit &unit,
                                               std::size_t cap = 1'000'000)
{
    std::vector<UnitChain> frontier{{start_level, {unit}}};
    validate_chain(tower, frontier.front());
    for (int k = start_level; k < tower.top_level(); ++k) {
        std::vector<UnitChain> next;
        for (const auto &c : frontier) {
            auto ext = chain_extensions(tower, c);
            next.insert(next.end(), ext.begin(), ext.end());
            if (next.size() > cap)
                throw CapExceeded("more than " + std::to_string(cap) + " chains");
        }
        frontier = std::move(next);
    }
    return frontier;
}

/// Every full-depth chain starting at every level and unit.
inline std::vector<UnitChain> all_full_chains(const Tower &tower, std::size_t cap = 1'000'000)
{
    std::vector<UnitChain> out;
    for (int k = 0; k <= tower.top_level(); ++k)
        for (const auto &e : tower.shape(k).units()) {
            auto cs = full_chains_from(tower, k, e, cap);
            out.insert(out.end(), cs.begin(), cs.end());
            if (out.size() > cap)
                throw CapExceeded("more than " + std::to_string(cap) + " chains");
        }
    return out;
}

/// Finite-depth picture of the limit ideal of a chain: the level ideals,
/// whether I_k = pullback(I_{k+1}) at each step, and whether all steps are
/// equalities (standard form).
struct LimitIdealApprox
{
    int start_level = 0;
    std::vector<Ideal> ideals;
    std::vector<bool> compat;
    bool standard_form = true;

    const Ideal &at_level(int level) const { return ideals.at(static_cast<std::size_t>(level - start_level)); }
    int end_level() const noexcept { return start_level + static_cast<int>(ideals.size()) - 1; }
};

/// Builds the approximant from a level sequence of ideals; asserts the
/// containment I_k >= pullback(I_{k+1}) when `require_containment`.
inline LimitIdealApprox make_limit_approx(const Tower &tower, int start_level, std::vector<Ideal> ideals,
                                          bool require_containment = true)
{
    LimitIdealApprox a;
    a.start_level = start_level;
    a.ideals = std::move(ideals);
    for (int k = start_level; k < a.end_level(); ++k) {
        Ideal pb = pullback_ideal(tower.map(k), a.at_level(k + 1));
        if (require_containment && !a.at_level(k).includes(pb))
            throw std::logic_error("containment I_k >= pullback(I_{k+1}) fails at level " + std::to_string(k));
        bool eq = pb == a.at_level(k);
        a.compat.push_back(eq);
        a.standard_form = a.standard_form && eq;
    }
    return a;
}

/// I_k = I(e^k) along the chain, with per-level compatibility flags.
inline LimitIdealApprox chain_ideal_sequence(const Tower &tower, const UnitChain &chain)
{
    validate_chain(tower, chain);
    std::vector<Ideal> ideals;
    for (int k = chain.start_level; k <= chain.end_level(); ++k)
        ideals.push_back(Ideal::largest_excluding(tower.shape(k), chain.at_level(k)));
    return make_limit_approx(tower, chain.start_level, std::move(ideals));
}

/// J_k for every level from the top ideal by repeated pullback; the result
/// is in standard form by construction.
inline std::vector<Ideal> standard_sequence_from_top(const Tower &tower, const Ideal &top)
{
    if (!(top.shape() == tower.shape(tower.top_level())))
        throw std::invalid_argument("top ideal does not belong to the top level");
    std::vector<Ideal> seq{top};
    for (int k = tower.top_level() - 1; k >= 0; --k)
        seq.insert(seq.begin(), pullback_ideal(tower.map(k), seq.front()));
    return seq;
}

/// Lazily enumerated ideal lattices, one per tower level.
class LatticeCache
{
public:
    explicit LatticeCache(EnumerationLimits limits = {}) : limits_(limits) {}

    const IdealLattice &get(const Tower &tower, int level)
    {
        auto key = tower.shape(level).blocks();
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, enumerate_ideals(tower.shape(level), limits_)).first;
        return it->second;
    }

private:
    EnumerationLimits limits_;
    std::map<std::vector<int>, IdealLattice> cache_;
};

/// Every level ideal of a standard-form approximant is (K4) in its level's
/// ideal lattice; the top level is the deepest check available at this
/// truncation.
inline bool verify_k4_limit(const Tower &tower, const LimitIdealApprox &approx, LatticeCache &cache)
{
    if (!approx.standard_form)
        throw std::invalid_argument("approximant is not in standard form");
    for (int k = approx.start_level; k <= approx.end_level(); ++k) {
        const auto &lattice = cache.get(tower, k);
        if (!is_k4(lattice.require_index(approx.at_level(k)), lattice))
            return false;
    }
    return true;
}

inline bool verify_k4_limit(const Tower &tower, const LimitIdealApprox &approx)
{
    LatticeCache cache;
    return verify_k4_limit(tower, approx, cache);
}

struct Decomposition
{
    std::vector<UnitChain> chains;
    std::vector<LimitIdealApprox> approximants;
    /// Intersection over approximants of their ideal at each level (only
    /// approximants that reach the level contribute).
    std::vector<Ideal> level_intersections;
    /// level_intersections[k] == J_k for every level.
    bool exact = true;
};

/// Recovers an ideal sequence as an intersection of chain ideals: for every
/// level k0 and every unit e not in J_{k0}, extend e by the first summand
/// (strand order) outside J at each level and take the chain's ideals.
inline Decomposition decompose_ideal(const Tower &tower, const std::vector<Ideal> &seq)
{
    if (!tower.has_standard_refinement_components())
        throw std::invalid_argument("decomposition needs standard or refinement components");
    if (seq.size() != tower.levels())
        throw std::invalid_argument("ideal sequence length does not match the tower");
    for (int k = 0; k < tower.top_level(); ++k)
        if (!(pullback_ideal(tower.map(k), seq[static_cast<std::size_t>(k + 1)]) == seq[static_cast<std::size_t>(k)]))
            throw std::invalid_argument("ideal sequence is not in standard form at level " + std::to_string(k));

    Decomposition d;
    for (int k = 0; k <= tower.top_level(); ++k)
        d.level_intersections.push_back(Ideal::full(tower.shape(k)));

    for (int k0 = 0; k0 <= tower.top_level(); ++k0) {
        const Shape &s0 = tower.shape(k0);
        for (const auto &e : s0.units()) {
            if (seq[static_cast<std::size_t>(k0)].contains(e))
                continue;
            UnitChain chain{k0, {e}};
            for (int k = k0; k < tower.top_level(); ++k) {
                std::optional<MatrixUnit> next;
                for (const auto &f : tower.map(k).image(chain.units.back()))
                    if (!seq[static_cast<std::size_t>(k + 1)].contains(f)) {
                        next = f;
                        break;
                    }
                if (!next)
                    throw std::logic_error("no summand of " + to_string(chain.units.back()) + " avoids the ideal at level " +
                                           std::to_string(k + 1));
                chain.units.push_back(*next);
            }
            auto approx = chain_ideal_sequence(tower, chain);
            for (int k = k0; k <= tower.top_level(); ++k) {
                if (!approx.at_level(k).includes(seq[static_cast<std::size_t>(k)]))
                    throw std::logic_error("chain ideal does not contain the sequence at level " + std::to_string(k));
                auto &acc = d.level_intersections[static_cast<std::size_t>(k)];
                acc = meet(acc, approx.at_level(k));
            }
            d.chains.push_back(std::move(chain));
            d.approximants.push_back(std::move(approx));
        }
    }
    for (int k = 0; k <= tower.top_level(); ++k)
        if (!(d.level_intersections[static_cast<std::size_t>(k)] == seq[static_cast<std::size_t>(k)]))
            d.exact = false;
    return d;
}

/// For I_4 = I(e_23) in T_4 and the two summands g of the image of e_23,
/// one pullback of I(g) equals I_4 and the other is the zero ideal.
inline bool twist_predicate(const Embedding &emb)
{
    const Shape &src = emb.source();
    if (!(src == Shape{4}))
        return false;
    const MatrixUnit corner{1, 2, 3};
    Ideal i4 = Ideal::largest_excluding(src, corner);
    auto img = emb.image(corner);
    if (img.size() != 2)
        return false;
    Ideal p0 = pullback_ideal(emb, Ideal::largest_excluding(emb.target(), img[0]));
    Ideal p1 = pullback_ideal(emb, Ideal::largest_excluding(emb.target(), img[1]));
    return (p0 == i4 && p1.is_zero()) || (p1 == i4 && p0.is_zero());
}

/// Exhaustive search of the unital two-strand embeddings T_4 -> T_8.
inline std::vector<Embedding> search_twisted_embeddings(const std::function<bool(const Embedding &)> &predicate = twist_predicate)
{
    std::vector<Embedding> out;
    for (auto &emb : two_strand_embeddings_t4_t8())
        if (predicate(emb))
            out.push_back(std::move(emb));
    return out;
}

} // namespace triaf

#pragma once

// Finite-level nest representations: compressions of the natural
// representation to diagonal intervals, their kernels and invariant
// subspaces, and the order on the restricted Gelfand points of a chain.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "triaf/tower.hpp"

namespace triaf {

/// Basis label of the natural representation: a diagonal position.
struct Label
{
    int block = 1;
    int position = 1;

    friend auto operator<=>(const Label &, const Label &) = default;
};

struct BlockInterval
{
    int block = 1;
    int first = 1;
    int last = 1;
};

/// The natural representation of a shape compressed to one diagonal
/// interval per listed block. A unit f = e_{ij} sends label j to label i
/// when both lie in the same listed interval, and acts as zero otherwise.
class IntervalCompression
{
public:
    IntervalCompression(Shape shape, std::vector<BlockInterval> intervals)
        : shape_(std::move(shape)), intervals_(std::move(intervals))
    {
        for (std::size_t a = 0; a < intervals_.size(); ++a) {
            const auto &iv = intervals_[a];
            if (iv.block < 1 || iv.block > shape_.block_count() || iv.first < 1 || iv.first > iv.last ||
                iv.last > shape_.block_size(iv.block))
                throw std::invalid_argument("invalid interval");
            for (std::size_t b = 0; b < a; ++b)
                if (intervals_[b].block == iv.block)
                    throw std::invalid_argument("at most one interval per block");
        }
        std::sort(intervals_.begin(), intervals_.end(),
                  [](const BlockInterval &x, const BlockInterval &y) { return x.block < y.block; });
    }

    const Shape &shape() const noexcept { return shape_; }
    const std::vector<BlockInterval> &intervals() const noexcept { return intervals_; }

    std::vector<Label> labels() const
    {
        std::vector<Label> out;
        for (const auto &iv : intervals_)
            for (int p = iv.first; p <= iv.last; ++p)
                out.push_back({iv.block, p});
        return out;
    }

    std::optional<Label> act(const MatrixUnit &f, const Label &x) const
    {
        shape_.require(f);
        const BlockInterval *iv = interval_of(f.block);
        if (!iv || x.block != f.block || x.position != f.col)
            return std::nullopt;
        if (f.row < iv->first || f.col > iv->last)
            return std::nullopt;
        return Label{f.block, f.row};
    }

private:
    const BlockInterval *interval_of(int block) const
    {
        for (const auto &iv : intervals_)
            if (iv.block == block)
                return &iv;
        return nullptr;
    }

    Shape shape_;
    std::vector<BlockInterval> intervals_;
};

/// Compression to the interval [e.row, e.col] of e's block.
inline IntervalCompression compress(const Shape &shape, const MatrixUnit &e)
{
    shape.require(e);
    return IntervalCompression(shape, {{e.block, e.row, e.col}});
}

/// The uncompressed natural representation on every block.
inline IntervalCompression natural_representation(const Shape &shape)
{
    std::vector<BlockInterval> all;
    for (int b = 1; b <= shape.block_count(); ++b)
        all.push_back({b, 1, shape.block_size(b)});
    return IntervalCompression(shape, std::move(all));
}

/// Units acting as zero on every label.
inline Ideal kernel(const IntervalCompression &rep)
{
    const Shape &s = rep.shape();
    auto labels = rep.labels();
    UnitSet m = s.empty_set();
    for (std::size_t x = 0; x < s.unit_count(); ++x) {
        const MatrixUnit &f = s.unit(x);
        bool zero = std::none_of(labels.begin(), labels.end(), [&](const Label &l) { return rep.act(f, l).has_value(); });
        if (zero)
            m.set(x);
    }
    return Ideal(s, std::move(m));
}

struct NestResult
{
    /// Invariant label subsets, ordered by size then lexicographically.
    std::vector<std::vector<Label>> subspaces;
    /// The subsets are totally ordered by inclusion.
    bool is_nest = true;
};

/// Every coordinate subspace invariant under all units. Each diagonal unit
/// of a listed interval acts as the coordinate projection onto its label,
/// so invariant subspaces are spans of label subsets and the search is
/// exhaustive over those.
inline NestResult invariant_subspace_nest(const IntervalCompression &rep, std::size_t max_labels = 20)
{
    auto labels = rep.labels();
    std::size_t n = labels.size();
    if (n > max_labels)
        throw CapExceeded("invariant subspace search limited to " + std::to_string(max_labels) + " labels");
    auto label_index = [&](const Label &l) {
        return static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin());
    };
    // moves[x] = labels reachable from label x by one unit
    std::vector<std::uint32_t> moves(n, 0);
    for (const auto &f : rep.shape().units())
        for (std::size_t x = 0; x < n; ++x)
            if (auto y = rep.act(f, labels[x]))
                moves[x] |= std::uint32_t{1} << label_index(*y);

    std::vector<std::uint32_t> invariant;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
            if ((s >> x) & 1U)
                ok = (moves[x] & ~s) == 0;
        if (ok)
            invariant.push_back(s);
    }
    std::sort(invariant.begin(), invariant.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    NestResult r;
    for (std::size_t a = 0; a < invariant.size(); ++a)
        for (std::size_t b = a + 1; b < invariant.size(); ++b)
            if ((invariant[a] & ~invariant[b]) && (invariant[b] & ~invariant[a]))
                r.is_nest = false;
    for (auto s : invariant) {
        std::vector<Label> sub;
        for (std::size_t x = 0; x < n; ++x)
            if ((s >> x) & 1U)
                sub.push_back(labels[x]);
        r.subspaces.push_back(std::move(sub));
    }
    return r;
}

/// Level-N shadow of the restricted Gelfand space of a chain. Points are
/// the level-N diagonal units q whose upward projection sequence
/// q^k0 >= ... >= q^N avoids I_k at every chain level k; levels below the
/// chain's start k0 play no part.
struct GelfandOrder
{
    int start_level = 0;
    int top_level = 0;
    std::vector<MatrixUnit> points;
    /// sequences[p][k - start_level] = q^k of point p.
    std::vector<std::vector<MatrixUnit>> sequences;
    /// x < y iff the sequences first differ at some level n with q_x^n
    /// strictly below q_y^n in the PPW order.
    bool total = true;
    bool transitive = true;
    /// q_x^n strictly below q_y^n implies q_x^k <= q_y^k for all k >= n.
    bool monotone = true;
};

namespace detail {

inline bool ppw_strict(const MatrixUnit &p, const MatrixUnit &q) { return p.block == q.block && p.row < q.row; }

inline bool gelfand_precedes(const std::vector<MatrixUnit> &x, const std::vector<MatrixUnit> &y)
{
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x[k] != y[k])
            return ppw_strict(x[k], y[k]);
    return false;
}

} // namespace detail

/// Upward sequence q^0, ..., q^level of a diagonal unit q at `level`.
inline std::vector<MatrixUnit> upward_sequence(const Tower &tower, int level, const MatrixUnit &q)
{
    std::vector<MatrixUnit> seq(static_cast<std::size_t>(level) + 1);
    seq[static_cast<std::size_t>(level)] = q;
    for (int k = level; k > 0; --k)
        seq[static_cast<std::size_t>(k - 1)] = tower.map(k - 1).parent_diagonal(seq[static_cast<std::size_t>(k)]);
    return seq;
}

/// Restricted Gelfand points at the chain's last level with their order
/// flags; points are listed in increasing order when the order is total.
inline GelfandOrder gelfand_restricted_order(const Tower &tower, const UnitChain &chain)
{
    if (!tower.has_standard_refinement_components())
        throw std::invalid_argument("Gelfand order needs standard or refinement components");
    auto approx = chain_ideal_sequence(tower, chain);
    GelfandOrder g;
    g.start_level = chain.start_level;
    g.top_level = chain.end_level();
    const Shape &top = tower.shape(g.top_level);
    for (int b = 1; b <= top.block_count(); ++b)
        for (int p = 1; p <= top.block_size(b); ++p) {
            MatrixUnit q{b, p, p};
            auto seq = upward_sequence(tower, g.top_level, q);
            seq.erase(seq.begin(), seq.begin() + g.start_level);
            bool keep = true;
            for (int k = g.start_level; k <= g.top_level && keep; ++k)
                keep = !approx.at_level(k).contains(seq[static_cast<std::size_t>(k - g.start_level)]);
            if (keep) {
                g.points.push_back(q);
                g.sequences.push_back(std::move(seq));
            }
        }

    std::size_t n = g.points.size();
    auto prec = [&](std::size_t a, std::size_t b) { return detail::gelfand_precedes(g.sequences[a], g.sequences[b]); };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && !prec(a, b) && !prec(b, a))
                g.total = false;
            for (std::size_t c = 0; c < n && g.transitive; ++c)
                if (prec(a, b) && prec(b, c) && !prec(a, c))
                    g.transitive = false;
            const auto &x = g.sequences[a];
            const auto &y = g.sequences[b];
            for (std::size_t lv = 0; lv < x.size(); ++lv)
                if (detail::ppw_strict(x[lv], y[lv]))
                    for (std::size_t k = lv; k < x.size(); ++k)
                        if (!(x[k].block == y[k].block && x[k].row <= y[k].row))
                            g.monotone = false;
        }

    if (g.total && g.transitive) {
        std::vector<std::size_t> order(n);
        for (std::size_t k = 0; k < n; ++k)
            order[k] = k;
        std::sort(order.begin(), order.end(), prec);
        std::vector<MatrixUnit> pts;
        std::vector<std::vector<MatrixUnit>> seqs;
        for (auto k : order) {
            pts.push_back(g.points[k]);
            seqs.push_back(g.sequences[k]);
        }
        g.points = std::move(pts);
        g.sequences = std::move(seqs);
    }
    return g;
}

} // namespace triaf

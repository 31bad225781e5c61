#pragma once

// Unital strand embeddings A_k -> A_{k+1} acting on matrix units.
//
// A strand copies one source block T_n into a target block along a strictly
// increasing map of diagonal positions sigma, so e_{ij} contributes the
// summand e_{sigma(i) sigma(j)}. The image of a unit is the sum over all
// strands leaving its block.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "triaf/ideal.hpp"

namespace triaf {

struct Strand
{
    int source_block = 1;
    int target_block = 1;
    /// 1-based target diagonal positions of source positions 1..n.
    std::vector<int> positions;

    friend bool operator==(const Strand &, const Strand &) = default;
};

class EmbeddingError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

class Embedding
{
public:
    /// Validates the strand family: increasing maps inside the target block,
    /// pairwise disjoint images that cover every target diagonal position,
    /// and at least one strand per source block.
    Embedding(Shape source, Shape target, std::vector<Strand> strands)
        : source_(std::move(source)), target_(std::move(target)), strands_(std::move(strands))
    {
        std::vector<std::vector<int>> owner(static_cast<std::size_t>(target_.block_count()));
        for (int b = 1; b <= target_.block_count(); ++b)
            owner[static_cast<std::size_t>(b - 1)].assign(static_cast<std::size_t>(target_.block_size(b)), -1);
        std::vector<int> strands_per_block(static_cast<std::size_t>(source_.block_count()), 0);

        for (std::size_t s = 0; s < strands_.size(); ++s) {
            const Strand &st = strands_[s];
            std::string tag = "strand " + std::to_string(s + 1);
            if (st.source_block < 1 || st.source_block > source_.block_count())
                throw EmbeddingError(tag + ": source block out of range");
            if (st.target_block < 1 || st.target_block > target_.block_count())
                throw EmbeddingError(tag + ": target block out of range");
            if (st.positions.size() != static_cast<std::size_t>(source_.block_size(st.source_block)))
                throw EmbeddingError(tag + ": length differs from source block size");
            int m = target_.block_size(st.target_block);
            for (std::size_t i = 0; i < st.positions.size(); ++i) {
                int p = st.positions[i];
                if (p < 1 || p > m)
                    throw EmbeddingError(tag + ": position " + std::to_string(p) + " outside target block");
                if (i > 0 && p <= st.positions[i - 1])
                    throw EmbeddingError(tag + ": positions are not strictly increasing");
                int &o = owner[static_cast<std::size_t>(st.target_block - 1)][static_cast<std::size_t>(p - 1)];
                if (o >= 0)
                    throw EmbeddingError(tag + ": overlaps strand " + std::to_string(o + 1) + " at target position " +
                                         std::to_string(p));
                o = static_cast<int>(s);
            }
            ++strands_per_block[static_cast<std::size_t>(st.source_block - 1)];
        }
        for (std::size_t b = 0; b < owner.size(); ++b)
            for (std::size_t p = 0; p < owner[b].size(); ++p)
                if (owner[b][p] < 0)
                    throw EmbeddingError("not unital: target block " + std::to_string(b + 1) + " position " +
                                         std::to_string(p + 1) + " is not covered");
        for (std::size_t b = 0; b < strands_per_block.size(); ++b)
            if (strands_per_block[b] == 0)
                throw EmbeddingError("source block " + std::to_string(b + 1) + " has no strand");
    }

    const Shape &source() const noexcept { return source_; }
    const Shape &target() const noexcept { return target_; }
    const std::vector<Strand> &strands() const noexcept { return strands_; }

    /// Summands of the image of e, in strand order.
    std::vector<MatrixUnit> image(const MatrixUnit &e) const
    {
        source_.require(e);
        std::vector<MatrixUnit> out;
        for (const auto &st : strands_)
            if (st.source_block == e.block)
                out.push_back({st.target_block, st.positions[static_cast<std::size_t>(e.row - 1)],
                               st.positions[static_cast<std::size_t>(e.col - 1)]});
        return out;
    }

    UnitSet image_set(const MatrixUnit &e) const
    {
        UnitSet s = target_.empty_set();
        for (const auto &f : image(e))
            s.set(target_.index(f));
        return s;
    }

    /// The diagonal unit of the source whose image contains target diagonal q.
    MatrixUnit parent_diagonal(const MatrixUnit &q) const
    {
        target_.require(q);
        if (!q.is_diagonal())
            throw std::invalid_argument("parent_diagonal takes a diagonal unit");
        for (const auto &st : strands_) {
            if (st.target_block != q.block)
                continue;
            auto it = std::find(st.positions.begin(), st.positions.end(), q.row);
            if (it != st.positions.end()) {
                int p = static_cast<int>(it - st.positions.begin()) + 1;
                return {st.source_block, p, p};
            }
        }
        throw std::logic_error("uncovered target diagonal");
    }

private:
    Shape source_;
    Shape target_;
    std::vector<Strand> strands_;
};

inline std::vector<MatrixUnit> image_of_unit(const Embedding &emb, const MatrixUnit &e) { return emb.image(e); }

inline Embedding embedding_from_strands(const Shape &source, const Shape &target, std::vector<Strand> strands)
{
    return Embedding(source, target, std::move(strands));
}

namespace detail {

inline void require_amplified(const Shape &source, const Shape &target, int multiplicity)
{
    if (multiplicity < 1)
        throw EmbeddingError("multiplicity must be positive");
    if (source.block_count() != target.block_count())
        throw EmbeddingError("target must have the same number of blocks as the source");
    for (int b = 1; b <= source.block_count(); ++b)
        if (target.block_size(b) != multiplicity * source.block_size(b))
            throw EmbeddingError("target block " + std::to_string(b) + " must have size " +
                                 std::to_string(multiplicity * source.block_size(b)));
}

} // namespace detail

/// Block-copy embedding: strand s sends i to (s-1)n + i.
inline Embedding standard_embedding(const Shape &source, const Shape &target, int multiplicity)
{
    detail::require_amplified(source, target, multiplicity);
    std::vector<Strand> strands;
    for (int b = 1; b <= source.block_count(); ++b) {
        int n = source.block_size(b);
        for (int s = 1; s <= multiplicity; ++s) {
            Strand st{b, b, {}};
            for (int i = 1; i <= n; ++i)
                st.positions.push_back((s - 1) * n + i);
            strands.push_back(std::move(st));
        }
    }
    return Embedding(source, target, std::move(strands));
}

/// Interleaved embedding: strand s sends i to (i-1)m + s.
inline Embedding refinement_embedding(const Shape &source, const Shape &target, int multiplicity)
{
    detail::require_amplified(source, target, multiplicity);
    std::vector<Strand> strands;
    for (int b = 1; b <= source.block_count(); ++b) {
        int n = source.block_size(b);
        for (int s = 1; s <= multiplicity; ++s) {
            Strand st{b, b, {}};
            for (int i = 1; i <= n; ++i)
                st.positions.push_back((i - 1) * multiplicity + s);
            strands.push_back(std::move(st));
        }
    }
    return Embedding(source, target, std::move(strands));
}

/// T_4 -> T_8 by the refinement embedding amplified by two: strands
/// (1,2,3,4) -> (1,2,5,6) and (1,2,3,4) -> (3,4,7,8). Along it the chain
/// e_23 -> e_25 pulls I(e_25) back to a strictly smaller ideal than I(e_23).
inline Embedding amplified_refinement_counterexample()
{
    return Embedding(Shape{4}, Shape({8}, 1), {{1, 1, {1, 2, 5, 6}}, {1, 1, {3, 4, 7, 8}}});
}

/// Letter labels a..j of the units of T_4, row by row, as in the usual
/// display of the counterexample.
inline char t4_entry_letter(const MatrixUnit &e)
{
    static const Shape t4{4};
    return static_cast<char>('a' + static_cast<int>(t4.index(e)));
}

/// { e in source : every summand of image(e) lies in J }.
inline Ideal pullback_ideal(const Embedding &emb, const Ideal &target_ideal)
{
    if (!(target_ideal.shape() == emb.target()))
        throw std::invalid_argument("ideal does not belong to the embedding target");
    const Shape &src = emb.source();
    UnitSet m = src.empty_set();
    for (std::size_t x = 0; x < src.unit_count(); ++x)
        if (emb.image_set(src.unit(x)).is_subset_of(target_ideal.members()))
            m.set(x);
    if (!Ideal::is_up_closed(src, m))
        throw std::logic_error("pullback of an ideal is not up-closed");
    return Ideal(src, std::move(m));
}

enum class ComponentKind { standard, refinement, other };

/// Classifies the component map from `source_block` into `target_block`:
/// standard if every strand image is a run of consecutive positions,
/// refinement if the strands interleave over one run (strand s sending i to
/// offset + (i-1)r + s). Blocks with no strands between them are a zero
/// component and are not classified.
inline ComponentKind component_kind(const Embedding &emb, int source_block, int target_block)
{
    std::vector<const Strand *> comp;
    for (const auto &st : emb.strands())
        if (st.source_block == source_block && st.target_block == target_block)
            comp.push_back(&st);
    if (comp.empty())
        throw std::invalid_argument("zero component");
    bool contiguous = std::all_of(comp.begin(), comp.end(), [](const Strand *st) {
        return st->positions.back() - st->positions.front() + 1 == static_cast<int>(st->positions.size());
    });
    if (contiguous)
        return ComponentKind::standard;
    std::sort(comp.begin(), comp.end(),
              [](const Strand *a, const Strand *b) { return a->positions.front() < b->positions.front(); });
    auto r = static_cast<int>(comp.size());
    int offset = comp.front()->positions.front() - 1;
    for (int s = 1; s <= r; ++s) {
        const auto &pos = comp[static_cast<std::size_t>(s - 1)]->positions;
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (pos[i] != offset + static_cast<int>(i) * r + s)
                return ComponentKind::other;
    }
    return ComponentKind::refinement;
}

/// Every non-zero component is a standard or a refinement embedding.
inline bool has_standard_refinement_components(const Embedding &emb)
{
    for (int sb = 1; sb <= emb.source().block_count(); ++sb)
        for (int tb = 1; tb <= emb.target().block_count(); ++tb) {
            bool present = std::any_of(emb.strands().begin(), emb.strands().end(), [&](const Strand &st) {
                return st.source_block == sb && st.target_block == tb;
            });
            if (present && component_kind(emb, sb, tb) == ComponentKind::other)
                return false;
        }
    return true;
}

/// Every unital two-strand embedding T_4 -> T_8, one per split of the eight
/// target positions into two 4-sets; the strand containing position 1 comes
/// first. 35 embeddings, in lexicographic order of the first strand.
inline std::vector<Embedding> two_strand_embeddings_t4_t8()
{
    std::vector<Embedding> out;
    const Shape src{4};
    const Shape dst({8}, 1);
    for (unsigned mask = 0; mask < 256; ++mask) {
        if (std::popcount(mask) != 4 || !(mask & 1U))
            continue;
        Strand a{1, 1, {}}, b{1, 1, {}};
        for (int p = 1; p <= 8; ++p)
            ((mask >> (p - 1)) & 1U ? a : b).positions.push_back(p);
        out.emplace_back(src, dst, std::vector<Strand>{a, b});
    }
    std::sort(out.begin(), out.end(), [](const Embedding &x, const Embedding &y) {
        return x.strands()[0].positions < y.strands()[0].positions;
    });
    return out;
}

} // namespace triaf

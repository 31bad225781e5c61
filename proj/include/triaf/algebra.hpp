#pragma once

// Shapes T_{n1} + ... + T_{nr}, their matrix-unit systems, and the two
// partial orders on units (<=_p) and on diagonal units (the PPW order).

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "triaf/bitset.hpp"

namespace triaf {

/// One matrix unit e_{row,col} of block `block`. All three coordinates are
/// 1-based, matching the way the matrices are displayed.
struct MatrixUnit
{
    int block = 1;
    int row = 1;
    int col = 1;

    bool is_diagonal() const noexcept { return row == col; }

    /// Domain projection d(e) = e_{col,col}.
    MatrixUnit domain() const noexcept { return {block, col, col}; }
    /// Range projection r(e) = e_{row,row}.
    MatrixUnit range() const noexcept { return {block, row, row}; }

    friend auto operator<=>(const MatrixUnit &, const MatrixUnit &) = default;
};

inline std::string to_string(const MatrixUnit &e)
{
    return "(" + std::to_string(e.block) + "," + std::to_string(e.row) + "," + std::to_string(e.col) + ")";
}

inline std::ostream &operator<<(std::ostream &os, const MatrixUnit &e) { return os << to_string(e); }

using UnitIndex = std::size_t;
using UnitSet = BitSet;

namespace detail {

struct ShapeData
{
    std::vector<int> blocks;
    int level = 0;
    std::vector<UnitIndex> block_offset; // first unit index of each block
    std::vector<MatrixUnit> units;       // canonical order
    std::vector<UnitSet> up;             // up-set of each unit under <=_p
    std::vector<UnitSet> down;           // down-set of each unit under <=_p
    std::vector<UnitIndex> diag_index;   // unit index of each diagonal, in (block, position) order
};

} // namespace detail

/// A level A_k = T_{n1} + ... + T_{nr}: an ordered list of upper-triangular
/// block sizes together with its canonical matrix-unit indexing. Cheap to
/// copy; the indexing tables are shared.
class Shape
{
public:
    Shape() : Shape(std::vector<int>{1}) {}

    explicit Shape(std::vector<int> blocks, int level = 0)
    {
        if (blocks.empty())
            throw std::invalid_argument("shape must have at least one block");
        for (int n : blocks)
            if (n < 1)
                throw std::invalid_argument("block sizes must be positive");
        if (level < 0)
            throw std::invalid_argument("level must be non-negative");

        auto d = std::make_shared<detail::ShapeData>();
        d->blocks = std::move(blocks);
        d->level = level;
        for (std::size_t b = 0; b < d->blocks.size(); ++b) {
            d->block_offset.push_back(d->units.size());
            int n = d->blocks[b];
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    d->units.push_back({static_cast<int>(b) + 1, i, j});
        }
        std::size_t u = d->units.size();
        d->up.assign(u, UnitSet(u));
        d->down.assign(u, UnitSet(u));
        for (std::size_t b = 0; b < d->blocks.size(); ++b) {
            std::size_t lo = d->block_offset[b];
            std::size_t hi = lo + static_cast<std::size_t>(d->blocks[b] * (d->blocks[b] + 1) / 2);
            for (std::size_t x = lo; x < hi; ++x)
                for (std::size_t y = lo; y < hi; ++y)
                    if (d->units[x].col <= d->units[y].col && d->units[x].row >= d->units[y].row) {
                        d->up[x].set(y);
                        d->down[y].set(x);
                    }
        }
        for (std::size_t b = 0; b < d->blocks.size(); ++b) {
            for (int p = 1; p <= d->blocks[b]; ++p)
                d->diag_index.push_back(index_in(*d, {static_cast<int>(b) + 1, p, p}));
        }
        data_ = std::move(d);
    }

    Shape(std::initializer_list<int> blocks) : Shape(std::vector<int>(blocks)) {}

    const std::vector<int> &blocks() const noexcept { return data_->blocks; }
    int level() const noexcept { return data_->level; }
    int block_count() const noexcept { return static_cast<int>(data_->blocks.size()); }
    int block_size(int block) const { return data_->blocks.at(static_cast<std::size_t>(block - 1)); }

    /// Total matrix dimension n1 + ... + nr.
    int dimension() const noexcept
    {
        int s = 0;
        for (int n : data_->blocks)
            s += n;
        return s;
    }

    std::size_t unit_count() const noexcept { return data_->units.size(); }
    std::size_t diagonal_count() const noexcept { return data_->diag_index.size(); }

    Shape with_level(int level) const { return Shape(data_->blocks, level); }

    const std::vector<MatrixUnit> &units() const noexcept { return data_->units; }
    const MatrixUnit &unit(UnitIndex i) const { return data_->units.at(i); }

    bool contains(const MatrixUnit &e) const noexcept
    {
        return e.block >= 1 && e.block <= block_count() && e.row >= 1 && e.row <= e.col &&
               e.col <= data_->blocks[static_cast<std::size_t>(e.block - 1)];
    }

    void require(const MatrixUnit &e) const
    {
        if (!contains(e))
            throw std::invalid_argument("matrix unit " + to_string(e) + " is not a unit of shape " + describe());
    }

    UnitIndex index(const MatrixUnit &e) const
    {
        require(e);
        return index_in(*data_, e);
    }

    /// Unit index of the diagonal unit at 1-based `position` of `block`.
    UnitIndex diagonal(int block, int position) const { return index({block, position, position}); }

    /// Units f with unit(i) <=_p f.
    const UnitSet &up_set(UnitIndex i) const { return data_->up.at(i); }
    /// Units f with f <=_p unit(i).
    const UnitSet &down_set(UnitIndex i) const { return data_->down.at(i); }

    UnitSet empty_set() const { return UnitSet(unit_count()); }
    UnitSet full_set() const { return UnitSet::full(unit_count()); }

    std::string describe() const
    {
        std::string s = "[";
        for (std::size_t b = 0; b < data_->blocks.size(); ++b) {
            if (b)
                s += ",";
            s += std::to_string(data_->blocks[b]);
        }
        return s + "]";
    }

    /// Shapes compare by block list only; the level label is informational.
    friend bool operator==(const Shape &a, const Shape &b) noexcept
    {
        return a.data_ == b.data_ || a.data_->blocks == b.data_->blocks;
    }

private:
    static UnitIndex index_in(const detail::ShapeData &d, const MatrixUnit &e)
    {
        auto n = static_cast<std::size_t>(d.blocks[static_cast<std::size_t>(e.block - 1)]);
        auto i = static_cast<std::size_t>(e.row), j = static_cast<std::size_t>(e.col);
        // rows 1..i-1 hold n, n-1, ..., n-i+2 units
        std::size_t before = (i - 1) * n - (i - 1) * (i - 2) / 2;
        return d.block_offset[static_cast<std::size_t>(e.block - 1)] + before + (j - i);
    }

    std::shared_ptr<const detail::ShapeData> data_;
};

inline std::ostream &operator<<(std::ostream &os, const Shape &s) { return os << s.describe(); }

inline std::vector<MatrixUnit> enumerate_units(const Shape &shape) { return shape.units(); }

/// e <=_p f: same block, e.col <= f.col and e.row >= f.row.
inline bool leq_p(const Shape &shape, const MatrixUnit &e, const MatrixUnit &f)
{
    shape.require(e);
    shape.require(f);
    return e.block == f.block && e.col <= f.col && e.row >= f.row;
}

/// Peters-Poon-Wagner order on diagonal units: p <= q iff some upper
/// triangular unit w has r(w) = p and d(w) = q, i.e. w = e_{p.row, q.row}.
inline bool ppw_leq(const Shape &shape, const MatrixUnit &p, const MatrixUnit &q)
{
    shape.require(p);
    shape.require(q);
    if (!p.is_diagonal() || !q.is_diagonal())
        throw std::invalid_argument("ppw_leq takes diagonal units");
    return p.block == q.block && p.row <= q.row;
}

/// e_{ij} e_{jk} = e_{ik}; none when the inner indices differ or the blocks do.
inline std::optional<MatrixUnit> unit_product(const Shape &shape, const MatrixUnit &e, const MatrixUnit &f)
{
    shape.require(e);
    shape.require(f);
    if (e.block != f.block || e.col != f.row)
        return std::nullopt;
    return MatrixUnit{e.block, e.row, f.col};
}

} // namespace triaf

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "triaf/algebra.hpp"

namespace triaf {

/// Two-sided ideal of a shape, stored as its (up-closed) set of matrix units.
class Ideal
{
public:
    /// Wraps a unit set that is already up-closed; throws otherwise.
    Ideal(Shape shape, UnitSet members) : shape_(std::move(shape)), members_(std::move(members))
    {
        if (members_.size() != shape_.unit_count())
            throw std::invalid_argument("member set does not match shape " + shape_.describe());
        if (!is_up_closed(shape_, members_))
            throw std::invalid_argument("unit set is not up-closed under <=_p");
    }

    static Ideal zero(const Shape &shape) { return Ideal(shape, shape.empty_set(), Trusted{}); }
    static Ideal full(const Shape &shape) { return Ideal(shape, shape.full_set(), Trusted{}); }

    /// Smallest ideal containing `units`.
    static Ideal generated_by(const Shape &shape, const std::vector<MatrixUnit> &units)
    {
        UnitSet m = shape.empty_set();
        for (const auto &e : units)
            m |= shape.up_set(shape.index(e));
        return Ideal(shape, std::move(m), Trusted{});
    }

    static Ideal generated_by(const Shape &shape, const UnitSet &units)
    {
        UnitSet m = shape.empty_set();
        units.for_each([&](std::size_t i) { m |= shape.up_set(i); });
        return Ideal(shape, std::move(m), Trusted{});
    }

    /// I(e): the largest ideal not containing e, { f : not f <=_p e }.
    static Ideal largest_excluding(const Shape &shape, const MatrixUnit &e)
    {
        return Ideal(shape, shape.down_set(shape.index(e)).complement(), Trusted{});
    }

    static bool is_up_closed(const Shape &shape, const UnitSet &m)
    {
        bool ok = true;
        m.for_each([&](std::size_t i) {
            if (ok && !shape.up_set(i).is_subset_of(m))
                ok = false;
        });
        return ok;
    }

    const Shape &shape() const noexcept { return shape_; }
    const UnitSet &members() const noexcept { return members_; }

    bool contains(const MatrixUnit &e) const { return members_.test(shape_.index(e)); }
    bool contains(UnitIndex i) const { return members_.test(i); }

    bool is_zero() const noexcept { return members_.none(); }
    bool is_proper() const noexcept { return !members_.all(); }

    /// *this is a superset of `other`.
    bool includes(const Ideal &other) const noexcept { return other.members_.is_subset_of(members_); }

    std::vector<MatrixUnit> member_units() const
    {
        std::vector<MatrixUnit> out;
        members_.for_each([&](std::size_t i) { out.push_back(shape_.unit(i)); });
        return out;
    }

    std::vector<MatrixUnit> excluded_units() const
    {
        std::vector<MatrixUnit> out;
        members_.complement().for_each([&](std::size_t i) { out.push_back(shape_.unit(i)); });
        return out;
    }

    /// Number of diagonal units not in the ideal.
    std::size_t excluded_diagonal_count() const
    {
        std::size_t c = 0;
        for (int b = 1; b <= shape_.block_count(); ++b)
            for (int p = 1; p <= shape_.block_size(b); ++p)
                if (!members_.test(shape_.diagonal(b, p)))
                    ++c;
        return c;
    }

    friend bool operator==(const Ideal &a, const Ideal &b) noexcept
    {
        return a.shape_ == b.shape_ && a.members_ == b.members_;
    }

    friend bool operator<(const Ideal &a, const Ideal &b) noexcept { return a.members_ < b.members_; }

private:
    struct Trusted
    {
    };

    Ideal(Shape shape, UnitSet members, Trusted) : shape_(std::move(shape)), members_(std::move(members)) {}

    friend Ideal meet(const Ideal &, const Ideal &);
    friend Ideal join(const Ideal &, const Ideal &);
    friend Ideal product(const Ideal &, const Ideal &);

    Shape shape_;
    UnitSet members_;
};

namespace detail {
inline void require_same_shape(const Ideal &j, const Ideal &k)
{
    if (!(j.shape() == k.shape()))
        throw std::invalid_argument("ideals belong to different shapes " + j.shape().describe() + " and " +
                                    k.shape().describe());
}
} // namespace detail

inline Ideal meet(const Ideal &j, const Ideal &k)
{
    detail::require_same_shape(j, k);
    return Ideal(j.shape_, j.members_ & k.members_, Ideal::Trusted{});
}

inline Ideal join(const Ideal &j, const Ideal &k)
{
    detail::require_same_shape(j, k);
    return Ideal(j.shape_, j.members_ | k.members_, Ideal::Trusted{});
}

/// J.K = span{ e_{ik} : e_{ij} in J, e_{jk} in K }. The composition set is
/// up-closed whenever J and K are; that is checked, not imposed.
inline Ideal product(const Ideal &j, const Ideal &k)
{
    detail::require_same_shape(j, k);
    const Shape &s = j.shape();
    UnitSet out = s.empty_set();
    j.members_.for_each([&](std::size_t x) {
        const MatrixUnit &e = s.unit(x);
        int n = s.block_size(e.block);
        for (int c = e.col; c <= n; ++c) {
            MatrixUnit f{e.block, e.col, c};
            if (k.members_.test(s.index(f)))
                out.set(s.index({e.block, e.row, c}));
        }
    });
    if (!Ideal::is_up_closed(s, out))
        throw std::logic_error("product of ideals is not up-closed");
    return Ideal(s, std::move(out), Ideal::Trusted{});
}

/// Column-height description of an ideal: for each block, heights[j-1] is
/// the number of rows 1..m(j) of column j that lie in the ideal. Heights are
/// nondecreasing with 0 <= m(j) <= j.
struct StaircaseProfile
{
    std::vector<std::vector<int>> heights;

    friend bool operator==(const StaircaseProfile &, const StaircaseProfile &) = default;
};

inline bool is_valid_staircase(const std::vector<int> &m)
{
    int prev = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[j] < prev || m[j] > static_cast<int>(j) + 1)
            return false;
        prev = m[j];
    }
    return true;
}

inline StaircaseProfile staircase_of(const Ideal &ideal)
{
    const Shape &s = ideal.shape();
    StaircaseProfile p;
    for (int b = 1; b <= s.block_count(); ++b) {
        int n = s.block_size(b);
        std::vector<int> m(static_cast<std::size_t>(n), 0);
        for (int j = 1; j <= n; ++j) {
            int h = 0;
            while (h < j && ideal.contains(MatrixUnit{b, h + 1, j}))
                ++h;
            m[static_cast<std::size_t>(j - 1)] = h;
        }
        p.heights.push_back(std::move(m));
    }
    return p;
}

inline Ideal ideal_from_staircase(const Shape &shape, const StaircaseProfile &p)
{
    if (p.heights.size() != static_cast<std::size_t>(shape.block_count()))
        throw std::invalid_argument("staircase block count does not match shape");
    UnitSet m = shape.empty_set();
    for (int b = 1; b <= shape.block_count(); ++b) {
        const auto &h = p.heights[static_cast<std::size_t>(b - 1)];
        if (h.size() != static_cast<std::size_t>(shape.block_size(b)) || !is_valid_staircase(h))
            throw std::invalid_argument("invalid staircase for block " + std::to_string(b));
        for (int j = 1; j <= shape.block_size(b); ++j)
            for (int i = 1; i <= h[static_cast<std::size_t>(j - 1)]; ++i)
                m.set(shape.index({b, i, j}));
    }
    return Ideal(shape, std::move(m));
}

} // namespace triaf

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace triaf {

/// Dynamic bitset over a fixed universe [0, size). Used for unit sets and
/// for subsets of point spaces. Words past `size` are always kept zero so
/// that equality and hashing can work word by word.
class BitSet
{
public:
    using Word = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    BitSet() = default;

    explicit BitSet(std::size_t size)
        : size_(size), words_((size + bits_per_word - 1) / bits_per_word, 0)
    {
    }

    static BitSet full(std::size_t size)
    {
        BitSet b(size);
        for (auto &w : b.words_)
            w = ~Word{0};
        b.trim();
        return b;
    }

    static BitSet from_word(std::size_t size, Word w)
    {
        BitSet b(size);
        if (!b.words_.empty())
            b.words_[0] = w;
        b.trim();
        return b;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept
    {
        return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U;
    }

    void set(std::size_t i) noexcept { words_[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
    void reset(std::size_t i) noexcept { words_[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
    void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }

    bool any() const noexcept { return !none(); }

    bool all() const noexcept { return count() == size_; }

    /// True iff every bit of *this is also set in `other`.
    bool is_subset_of(const BitSet &other) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k])
                return false;
        return true;
    }

    /// (a & b) is a subset of c, without materializing the intersection.
    static bool meet_is_subset_of(const BitSet &a, const BitSet &b, const BitSet &c) noexcept
    {
        for (std::size_t k = 0; k < a.words_.size(); ++k)
            if (a.words_[k] & b.words_[k] & ~c.words_[k])
                return false;
        return true;
    }

    bool intersects(const BitSet &other) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k])
                return true;
        return false;
    }

    BitSet &operator&=(const BitSet &o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }

    BitSet &operator|=(const BitSet &o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }

    BitSet &subtract(const BitSet &o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    BitSet complement() const
    {
        BitSet r(size_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    friend BitSet operator&(BitSet a, const BitSet &b) { return a &= b; }
    friend BitSet operator|(BitSet a, const BitSet &b) { return a |= b; }

    friend bool operator==(const BitSet &a, const BitSet &b) noexcept
    {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    /// Orders by population count, then by the highest differing word; a
    /// total order used only to make listings deterministic.
    friend bool operator<(const BitSet &a, const BitSet &b) noexcept
    {
        auto ca = a.count(), cb = b.count();
        if (ca != cb)
            return ca < cb;
        return std::lexicographical_compare(a.words_.rbegin(), a.words_.rend(), b.words_.rbegin(),
                                            b.words_.rend());
    }

    template <typename F>
    void for_each(F &&f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            Word w = words_[k];
            while (w) {
                auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(k * bits_per_word + bit);
                w &= w - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    Word word(std::size_t k) const noexcept { return words_[k]; }
    std::size_t word_count() const noexcept { return words_.size(); }

    std::size_t hash() const noexcept
    {
        std::size_t h = size_;
        for (auto w : words_)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() noexcept
    {
        if (size_ % bits_per_word != 0 && !words_.empty())
            words_.back() &= (Word{1} << (size_ % bits_per_word)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

struct BitSetHash
{
    std::size_t operator()(const BitSet &b) const noexcept { return b.hash(); }
};

} // namespace triaf

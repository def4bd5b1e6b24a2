#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace monogrid {

/// Fixed-width bit row over vertex indices. Width is set at construction
/// and every binary operation expects operands of identical width.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t width) : width_(width), words_((width + word_bits - 1) / word_bits, 0) {}

    static Bitset full(std::size_t width)
    {
        Bitset b(width);
        for (auto& w : b.words_)
            w = ~word_type{0};
        b.trim();
        return b;
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const word_type* data() const noexcept { return words_.data(); }
    word_type* data() noexcept { return words_.data(); }

    bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
    void clear() noexcept
    {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const noexcept
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const noexcept { return !none(); }

    /// Lowest set index, or npos.
    std::size_t first() const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k])
                return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return npos;
    }

    /// Lowest set index strictly greater than i, or npos.
    std::size_t next(std::size_t i) const noexcept
    {
        ++i;
        if (i >= width_)
            return npos;
        std::size_t k = i / word_bits;
        word_type w = words_[k] & (~word_type{0} << (i % word_bits));
        while (true) {
            if (w)
                return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++k >= words_.size())
                return npos;
            w = words_[k];
        }
    }

    std::size_t and_count(const Bitset& o) const noexcept
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    bool intersects(const Bitset& o) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k])
                return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    Bitset& operator^=(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] ^= o.words_[k];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a.subtract(b); }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (auto i = first(); i != npos; i = next(i))
            out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            word_type w = words_[k];
            while (w) {
                f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    void trim() noexcept
    {
        if (width_ % word_bits && !words_.empty())
            words_.back() &= (word_type{1} << (width_ % word_bits)) - 1;
    }

    std::size_t width_ = 0;
    std::vector<word_type> words_;
};

} // namespace monogrid

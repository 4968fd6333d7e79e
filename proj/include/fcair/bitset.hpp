#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace fcair {

// Fixed-width bit vector used for extents, intents and incidence rows/columns.
// Width is set at construction and only changes through resize().
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false)
        : size_(size), words_((size + word_bits - 1) / word_bits, value ? ~word_type{0} : 0) {
        trim();
    }

    static Bitset full(std::size_t size) { return Bitset(size, true); }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i / word_bits] >> (i % word_bits)) & 1u; }
    void set(std::size_t i) noexcept { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) noexcept { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }
    void set(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

    void resize(std::size_t size, bool value = false) {
        std::size_t old = size_;
        size_ = size;
        words_.resize((size + word_bits - 1) / word_bits, 0);
        if (value)
            for (std::size_t i = old; i < size; ++i) set(i);
        trim();
    }

    std::size_t count() const noexcept {
        std::size_t n = 0;
        for (word_type w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool none() const noexcept {
        for (word_type w : words_)
            if (w) return false;
        return true;
    }
    bool any() const noexcept { return !none(); }
    bool all() const noexcept { return count() == size_; }

    bool is_subset_of(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool is_proper_subset_of(const Bitset& other) const noexcept {
        return is_subset_of(other) && *this != other;
    }
    bool intersects(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    // True when this and other agree on every bit below `bound`.
    bool equal_below(const Bitset& other, std::size_t bound) const noexcept {
        std::size_t full_words = bound / word_bits;
        for (std::size_t i = 0; i < full_words; ++i)
            if (words_[i] != other.words_[i]) return false;
        std::size_t rem = bound % word_bits;
        if (rem == 0) return true;
        word_type mask = (word_type{1} << rem) - 1;
        return ((words_[full_words] ^ other.words_[full_words]) & mask) == 0;
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a -= b; }

    friend bool operator==(const Bitset&, const Bitset&) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type bits = words_[w];
            while (bits) {
                std::size_t b = static_cast<std::size_t>(std::countr_zero(bits));
                f(w * word_bits + b);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = size_;
        for (word_type w : words_) h ^= std::hash<word_type>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() noexcept {
        std::size_t rem = size_ % word_bits;
        if (rem && !words_.empty()) words_.back() &= (word_type{1} << rem) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const noexcept { return b.hash(); }
};

}  // namespace fcair

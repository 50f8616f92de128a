#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mdim {

/// Runtime-sized bitset with just the word-parallel operations the search
/// loops need.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + bits_per_word - 1) / bits_per_word, 0) {}

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) noexcept { words_[i / bits_per_word] |= Word{1} << (i % bits_per_word); }
    void reset(std::size_t i) noexcept { words_[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word)); }
    bool test(std::size_t i) const noexcept { return (words_[i / bits_per_word] >> (i % bits_per_word)) & 1U; }

    void set_all() noexcept {
        for (auto& w : words_) w = ~Word{0};
        trim();
    }

    bool none() const noexcept {
        for (Word w : words_) {
            if (w) return false;
        }
        return true;
    }
    bool any() const noexcept { return !none(); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    /// Index of the lowest set bit, or size() if none.
    std::size_t first() const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i]) return i * bits_per_word + static_cast<std::size_t>(std::countr_zero(words_[i]));
        }
        return size_;
    }

    /// Next set bit strictly after i, or size() if none.
    std::size_t next(std::size_t i) const noexcept {
        ++i;
        if (i >= size_) return size_;
        std::size_t wi = i / bits_per_word;
        Word w = words_[wi] & (~Word{0} << (i % bits_per_word));
        while (true) {
            if (w) return wi * bits_per_word + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }

    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    /// (this & ~o).any() without materialising it.
    bool intersects_complement_of(const Bitset& o) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] & ~o.words_[i]) return true;
        }
        return false;
    }
    std::size_t count_and(const Bitset& o) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) c += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
        return c;
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() noexcept {
        if (size_ % bits_per_word && !words_.empty()) words_.back() &= (Word{1} << (size_ % bits_per_word)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace mdim

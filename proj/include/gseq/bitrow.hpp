#ifndef GSEQ_BITROW_HPP
#define GSEQ_BITROW_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace gseq {

// Dynamic fixed-width bitset used for adjacency rows and candidate sets.
// Width is chosen at construction; all binary operations assume equal width.
class BitRow {
public:
    BitRow() = default;
    explicit BitRow(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0u) {}

    int width() const { return nbits_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set_all() {
        for (auto& w : words_) w = ~uint64_t{0};
        trim();
    }
    void clear_all() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    BitRow& operator&=(const BitRow& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    BitRow& operator|=(const BitRow& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    // this &= ~o
    void and_not(const BitRow& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    }

    // Lowest set bit at position >= from, or -1.
    int next_set(int from = 0) const {
        if (from >= nbits_) return -1;
        int wi = from >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (w) return (wi << 6) + std::countr_zero(w);
            if (++wi >= static_cast<int>(words_.size())) return -1;
            w = words_[wi];
        }
    }

    bool operator==(const BitRow&) const = default;

    const std::vector<uint64_t>& words() const { return words_; }

private:
    void trim() {
        int excess = static_cast<int>(words_.size()) * 64 - nbits_;
        if (excess > 0 && !words_.empty())
            words_.back() &= ~uint64_t{0} >> excess;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace gseq

#endif

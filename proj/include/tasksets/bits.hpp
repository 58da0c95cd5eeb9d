#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace tasksets {

// Fixed-length bit row, one bit per tick. The curve and overlap kernels
// operate on whole words.
class Bits {
public:
    Bits() = default;
    explicit Bits(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
    void assign(int i, bool v) {
        if (v) words_[i >> 6] |= uint64_t{1} << (i & 63);
        else words_[i >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    const std::vector<uint64_t>& words() const { return words_; }

    long count() const {
        long c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    friend bool operator==(const Bits&, const Bits&) = default;

private:
    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

inline long and_count(const Bits& a, const Bits& b) {
    long c = 0;
    for (size_t i = 0; i < a.words().size(); ++i)
        c += std::popcount(a.words()[i] & b.words()[i]);
    return c;
}

inline long or_count(const Bits& a, const Bits& b) {
    long c = 0;
    for (size_t i = 0; i < a.words().size(); ++i)
        c += std::popcount(a.words()[i] | b.words()[i]);
    return c;
}

} // namespace tasksets

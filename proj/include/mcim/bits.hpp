#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mcim {

/// Fixed-width little-endian bit vector. Values wider than 64 bits show up
/// as soon as operands reach 128x128, so ports and traces use this instead
/// of a plain integer.
class Bits {
public:
    Bits() = default;
    explicit Bits(int width) : width_(width), words_((width + 63) / 64, 0) {}

    static Bits from_u64(int width, std::uint64_t value) {
        Bits b(width);
        if (!b.words_.empty()) b.words_[0] = value;
        b.mask_top();
        return b;
    }

    int width() const { return width_; }

    bool get(int i) const { return (words_[i / 64] >> (i % 64)) & 1; }

    void set(int i, bool v) {
        if (v)
            words_[i / 64] |= std::uint64_t(1) << (i % 64);
        else
            words_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
    }

    std::uint64_t word(int i) const {
        return i < static_cast<int>(words_.size()) ? words_[i] : 0;
    }
    void set_word(int i, std::uint64_t v) {
        words_[i] = v;
        if (i + 1 == static_cast<int>(words_.size())) mask_top();
    }
    int word_count() const { return static_cast<int>(words_.size()); }

    /// Low 64 bits; enough for every width the tests index directly.
    std::uint64_t low_u64() const { return words_.empty() ? 0 : words_[0]; }

    bool is_zero() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s;
        int nibbles = (width_ + 3) / 4;
        for (int i = nibbles - 1; i >= 0; --i) {
            unsigned v = (word(i / 16) >> ((i % 16) * 4)) & 0xf;
            s.push_back(digits[v]);
        }
        return s.empty() ? "0" : s;
    }

    friend bool operator==(const Bits& a, const Bits& b) {
        return a.width_ == b.width_ && a.words_ == b.words_;
    }
    friend bool operator!=(const Bits& a, const Bits& b) { return !(a == b); }

private:
    void mask_top() {
        if (width_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t(1) << (width_ % 64)) - 1;
    }

    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Schoolbook product, used by the CLI self-check and the generated
/// testbench semantics. Tests cross-check it against GMP.
Bits mul_bits(const Bits& a, const Bits& b);

/// 64-bit linear congruential generator (MMIX constants). The generated
/// testbenches embed the same recurrence so external and internal runs see
/// identical operand streams.
struct Lcg64 {
    std::uint64_t state = 1;

    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state;
    }
};

/// Draws ceil(width/64) words low-first and masks the top word.
Bits random_bits(Lcg64& rng, int width);

}  // namespace mcim

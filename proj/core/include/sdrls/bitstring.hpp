#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sdrls {

class RandomSource;

// Fixed-length binary search point. Length never changes after construction;
// unused high bits of the last word are kept zero so equality and popcount
// can work word-wise.
class BitString {
public:
    explicit BitString(std::uint32_t n) : n_(n), words_((n + 63) / 64, 0) {
        if (n == 0) throw std::invalid_argument("BitString: length must be positive");
    }

    static BitString random(std::uint32_t n, RandomSource& rng);

    std::uint32_t size() const { return n_; }

    bool test(std::uint32_t i) const {
        assert(i < n_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::uint32_t i, bool v) {
        assert(i < n_);
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }

    void flip(std::uint32_t i) {
        assert(i < n_);
        words_[i >> 6] ^= std::uint64_t(1) << (i & 63);
    }

    void flip_all() {
        for (auto& w : words_) w = ~w;
        mask_tail();
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    std::uint32_t ones_count() const {
        std::uint32_t c = 0;
        for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
        return c;
    }

    bool operator==(const BitString&) const = default;

    // "x1 x2 ... xn" rendered left to right, e.g. 1^3 0^2 -> "11100".
    std::string to_string() const {
        std::string s(n_, '0');
        for (std::uint32_t i = 0; i < n_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

    static BitString parse(std::string_view s) {
        BitString x(static_cast<std::uint32_t>(s.size()));
        for (std::uint32_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') x.set(i, true);
            else if (s[i] != '0') throw std::invalid_argument("BitString::parse: expected only 0/1");
        }
        return x;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    void mask_tail() {
        const std::uint32_t used = n_ & 63;
        if (used != 0) words_.back() &= (std::uint64_t(1) << used) - 1;
    }
    friend std::uint32_t hamming(const BitString&, const BitString&);

    std::uint32_t n_;
    std::vector<std::uint64_t> words_;
};

inline std::uint32_t hamming(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming: length mismatch");
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
        d += static_cast<std::uint32_t>(std::popcount(a.words_[i] ^ b.words_[i]));
    return d;
}

} // namespace sdrls

// Bit vector identifying a commutation class, indexed by the lex-sorted
// 321-triples of the owning permutation. Stays inline in fixed machine words
// up to 384 bits (covers binom(14,3)); spills to the heap beyond that.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/container/small_vector.hpp>

namespace redword {

class BitSignature {
public:
    BitSignature() : bits_(0) {}

    explicit BitSignature(int bits)
        : bits_(bits), words_(static_cast<size_t>((bits + 63) / 64), 0) {
        if (bits < 0) throw std::invalid_argument("signature: negative size");
    }

    int size() const { return bits_; }

    bool test(int k) const {
        return (words_[static_cast<size_t>(k) / 64] >> (static_cast<unsigned>(k) % 64)) & 1u;
    }

    void set(int k, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (static_cast<unsigned>(k) % 64);
        if (v) {
            words_[static_cast<size_t>(k) / 64] |= mask;
        } else {
            words_[static_cast<size_t>(k) / 64] &= ~mask;
        }
    }

    int popcount() const {
        int c = 0;
        for (const auto w : words_) c += std::popcount(w);
        return c;
    }

    int hamming(const BitSignature& o) const {
        if (o.bits_ != bits_) throw std::invalid_argument("signature: size mismatch");
        int c = 0;
        for (size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] ^ o.words_[i]);
        return c;
    }

    bool all_zero() const { return popcount() == 0; }
    bool all_one() const { return popcount() == bits_; }

    /// "0"/"1" characters, bit 0 (first triple in lex order) first.
    std::string to_string() const {
        std::string s(static_cast<size_t>(bits_), '0');
        for (int k = 0; k < bits_; ++k) {
            if (test(k)) s[static_cast<size_t>(k)] = '1';
        }
        return s;
    }

    static BitSignature from_string(const std::string& s) {
        BitSignature sig(static_cast<int>(s.size()));
        for (size_t k = 0; k < s.size(); ++k) {
            if (s[k] != '0' && s[k] != '1') {
                throw std::invalid_argument("signature: bad character");
            }
            sig.set(static_cast<int>(k), s[k] == '1');
        }
        return sig;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(bits_) * 0x9e3779b97f4a7c15ull;
        for (const auto w : words_) {
            h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }

    bool operator==(const BitSignature& o) const {
        return bits_ == o.bits_ && words_ == o.words_;
    }

private:
    int bits_;
    boost::container::small_vector<std::uint64_t, 6> words_;
};

struct BitSignatureHash {
    std::size_t operator()(const BitSignature& s) const { return s.hash(); }
};

}  // namespace redword

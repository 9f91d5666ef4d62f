// Words over the adjacent-transposition alphabet, reduced-word enumeration and
// the elementary rewriting moves.
//
// Convention fixed for the whole library: a word a_1...a_k acts on the
// identity left to right, letter i swapping the entries at positions i and
// i+1 of the current one-line word.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "redword/permutation.hpp"

namespace redword {

/// A word over letters 1..n-1 for the group on n symbols. A word is reduced
/// for w when applying it yields w and its length equals length(w).
struct Word {
    int n = 1;
    std::vector<int> letters;

    Word() = default;
    Word(int n_, std::vector<int> letters_) : n(n_), letters(std::move(letters_)) {}

    int size() const { return static_cast<int>(letters.size()); }

    /// Digit string when n <= 10 (letters are single digits), comma-separated
    /// otherwise; empty word renders as "".
    std::string str() const;

    /// Inverse of str() for a known alphabet size.
    static Word parse(int n, std::string_view text);

    bool operator==(const Word& o) const { return n == o.n && letters == o.letters; }
    bool operator<(const Word& o) const { return letters < o.letters; }
};

/// Applies the word to the identity under the position-swap convention.
/// Throws when a letter is outside [1, n-1].
Permutation apply_word(const Word& a);

/// True iff a has length(w) letters and applies to w.
bool is_reduced(const Permutation& w, const Word& a);

enum class EnumStatus { complete, truncated };

/// Streams every reduced word of w exactly once, in lexicographic order.
/// Stops after `cap` words and reports truncation; a truncated run is always
/// distinguishable from a complete one.
EnumStatus enumerate_reduced_words(const Permutation& w, std::uint64_t cap,
                                   const std::function<void(const Word&)>& yield);

/// Convenience collector for enumerate_reduced_words.
std::vector<Word> reduced_words(const Permutation& w, std::uint64_t cap,
                                EnumStatus* status = nullptr);

/// Extreme reduced words: peel w to the identity always removing the smallest
/// (resp. greatest) left descent, i.e. the smallest/greatest i whose value
/// swap i <-> i+1 shortens the permutation, emitting letters front to back.
/// a_min is the lexicographically least reduced word of w, a_max the greatest.
Word a_min(const Permutation& w);
Word a_max(const Permutation& w);

/// Positions i (1 <= i < |a|) with |a_i - a_{i+1}| >= 2.
std::vector<int> commutation_moves(const Word& a);

/// Swaps letters i and i+1; requires i to be a commutation position.
Word apply_commutation(const Word& a, int i);

/// Centers j (2 <= j <= |a|-1) with a_{j-1} = a_{j+1} and |a_j - a_{j-1}| = 1.
std::vector<int> braid_moves(const Word& a);

/// Rewrites the factor around center j between i(i+1)i and (i+1)i(i+1).
Word apply_braid(const Word& a, int j);

}  // namespace redword

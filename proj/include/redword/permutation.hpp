// Permutations of [n] in one-line notation, their inversion statistics and
// pattern predicates. Values and positions are 1-based throughout the library.
#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace redword {

/// A permutation w of {1,...,n} stored in one-line notation, w(i) = oneline[i-1].
/// Construction validates that the input is a bijection on [n].
class Permutation {
public:
    explicit Permutation(std::vector<int> oneline);

    static Permutation identity(int n);

    /// Longest element n, n-1, ..., 1.
    static Permutation reversal(int n);

    /// Accepts a bare digit string ("25431") only for n <= 9, or a
    /// comma-separated list ("2,5,4,3,1") for any n.
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(oneline_.size()); }

    /// w(i), 1 <= i <= n.
    int operator()(int i) const { return oneline_[static_cast<size_t>(i) - 1]; }

    /// Position of a value in the one-line word, 1-based.
    int position_of(int value) const { return positions_[static_cast<size_t>(value) - 1]; }

    const std::vector<int>& oneline() const { return oneline_; }

    Permutation inverse() const;

    /// (w.compose(v))(i) = w(v(i)).
    Permutation compose(const Permutation& v) const;

    /// Comma-separated machine form, e.g. "2,5,4,3,1".
    std::string str() const;

    /// Digit string when n <= 9, comma form otherwise.
    std::string compact_str() const;

    bool operator==(const Permutation&) const;
    bool operator<(const Permutation& o) const { return oneline_ < o.oneline_; }

private:
    std::vector<int> oneline_;
    std::vector<int> positions_;  // positions_[v-1] = position of value v
};

/// Pair of values (larger, smaller) with the larger one appearing first in w.
struct InversionPair {
    int larger;
    int smaller;
    friend auto operator<=>(const InversionPair&, const InversionPair&) = default;
};

/// Values x < y < z occurring as the decreasing subsequence z, y, x in w.
struct Triple321 {
    int x;
    int y;
    int z;
    friend auto operator<=>(const Triple321&, const Triple321&) = default;
};

/// Cell of the inversion diagram: row = position of the larger value, col = the
/// smaller value. "Above" means larger row in the same column, "right" means
/// larger column in the same row (row 1 sits at the bottom when drawn).
struct RotheCell {
    int row;
    int col;
    friend auto operator<=>(const RotheCell&, const RotheCell&) = default;
};

/// All inversion pairs of w, sorted lexicographically.
std::vector<InversionPair> inversions(const Permutation& w);

/// Number of inversions (Coxeter length).
int length(const Permutation& w);

/// Positions i with w(i) > w(i+1), ascending.
std::vector<int> descent_set(const Permutation& w);

/// All triples (x,y,z), x<y<z, appearing as z,y,x in w; sorted lexicographically.
/// This order indexes the bits of class signatures.
std::vector<Triple321> triples_321(const Permutation& w);

/// One cell per inversion (v,u): (position of v, u).
std::vector<RotheCell> rothe_diagram(const Permutation& w);

/// True iff some subsequence of w is order-isomorphic to p. Brute force over
/// subsequences; rejects |p| > |w|.
bool contains_pattern(const Permutation& w, const Permutation& p);

/// True iff w avoids the pattern 321.
bool is_fully_commutative(const Permutation& w);

/// The unique peak position when w increases up to it and decreases after;
/// absent when w is not unimodal. The identity peaks at n, the reversal at 1.
std::optional<int> unimodal_peak(const Permutation& w);

}  // namespace redword

// Balanced labellings of inversion diagrams: the canonical labelling of a
// reduced word, its inverse, and the two label-swap moves mirroring
// commutations and braid rewrites.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "redword/permutation.hpp"
#include "redword/words.hpp"

namespace redword {

/// Labelling of the cells of D(w) by 1..length(w), keyed by inversion pairs.
/// Construction validates that the labels form a bijection from the cells of
/// D(w) onto [length(w)]; balance is a separate check (is_balanced).
class BalancedTableau {
public:
    BalancedTableau(Permutation w, const std::vector<std::pair<InversionPair, int>>& labels);

    const Permutation& perm() const { return w_; }
    int label_count() const { return static_cast<int>(cells_.size()); }

    /// Inversion pairs of w in lexicographic order.
    const std::vector<InversionPair>& cells() const { return cells_; }

    int label(const InversionPair& inv) const;
    int label(int larger, int smaller) const { return label({larger, smaller}); }

    InversionPair cell_of_label(int i) const;

    /// Grid coordinates: (position of the larger value, smaller value).
    RotheCell grid_cell(const InversionPair& inv) const {
        return {w_.position_of(inv.larger), inv.smaller};
    }

    bool operator==(const BalancedTableau& o) const {
        return w_ == o.w_ && labels_ == o.labels_;
    }

private:
    friend BalancedTableau canonical_labelling(const Permutation&, const Word&);
    BalancedTableau(Permutation w, std::vector<int> labels, std::vector<InversionPair> cells,
                    std::vector<InversionPair> by_label);

    Permutation w_;
    std::vector<InversionPair> cells_;     // lex sorted
    std::vector<int> labels_;              // aligned with cells_
    std::vector<InversionPair> by_label_;  // by_label_[i-1] = cell of label i
};

/// Replays a reduced word of w; step i labels the inversion it creates with i.
/// Throws when a is not reduced for w.
BalancedTableau canonical_labelling(const Permutation& w, const Word& a);

/// Balance at every cell: entries strictly right in the row that are greater
/// must equal entries strictly above in the column that are smaller.
bool is_balanced(const BalancedTableau& t);

/// Raised when a labelling cannot be replayed as a reduced word.
struct UnrealizableTableau : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Inverse of canonical_labelling: replays labels 1..l, requiring the two
/// values of each labelled inversion to sit in adjacent positions (smaller
/// immediately left of larger). Throws UnrealizableTableau otherwise.
Word word_from_tableau(const BalancedTableau& t);

/// Swaps labels i and i+1; requires their cells to share neither row nor
/// column. Mirrors a single commutation of the underlying word.
BalancedTableau c_move(const BalancedTableau& t, int i);

/// Swaps labels i-1 and i+1; requires one of them in the same column strictly
/// above label i and the other in the same row strictly right of it. Mirrors a
/// single braid rewrite.
BalancedTableau b_move(const BalancedTableau& t, int i);

/// First-quadrant rendering with row 1 at the bottom.
std::string render_grid(const BalancedTableau& t);

/// Machine form: JSON object mapping "p,q" inversion keys to labels.
nlohmann::json tableau_to_json(const BalancedTableau& t);
BalancedTableau tableau_from_json(const Permutation& w, const nlohmann::json& j);

}  // namespace redword

#include "redword/tableau.hpp"

#include <algorithm>
#include <sstream>

namespace redword {

BalancedTableau::BalancedTableau(Permutation w, std::vector<int> labels,
                                 std::vector<InversionPair> cells,
                                 std::vector<InversionPair> by_label)
    : w_(std::move(w)),
      cells_(std::move(cells)),
      labels_(std::move(labels)),
      by_label_(std::move(by_label)) {}

BalancedTableau::BalancedTableau(Permutation w,
                                 const std::vector<std::pair<InversionPair, int>>& labels)
    : w_(std::move(w)), cells_(inversions(w_)) {
    const int len = static_cast<int>(cells_.size());
    if (static_cast<int>(labels.size()) != len) {
        throw std::invalid_argument("tableau: expected " + std::to_string(len) + " labels, got " +
                                    std::to_string(labels.size()));
    }
    labels_.assign(cells_.size(), 0);
    by_label_.assign(cells_.size(), InversionPair{0, 0});
    for (const auto& [inv, lab] : labels) {
        const auto it = std::lower_bound(cells_.begin(), cells_.end(), inv);
        if (it == cells_.end() || !(*it == inv)) {
            throw std::invalid_argument("tableau: (" + std::to_string(inv.larger) + "," +
                                        std::to_string(inv.smaller) + ") is not an inversion");
        }
        if (lab < 1 || lab > len) {
            throw std::invalid_argument("tableau: label " + std::to_string(lab) +
                                        " out of range");
        }
        const size_t idx = static_cast<size_t>(it - cells_.begin());
        if (labels_[idx] != 0) {
            throw std::invalid_argument("tableau: cell labelled twice");
        }
        if (by_label_[static_cast<size_t>(lab) - 1].larger != 0) {
            throw std::invalid_argument("tableau: label " + std::to_string(lab) + " used twice");
        }
        labels_[idx] = lab;
        by_label_[static_cast<size_t>(lab) - 1] = inv;
    }
}

int BalancedTableau::label(const InversionPair& inv) const {
    const auto it = std::lower_bound(cells_.begin(), cells_.end(), inv);
    if (it == cells_.end() || !(*it == inv)) {
        throw std::invalid_argument("tableau: no such cell");
    }
    return labels_[static_cast<size_t>(it - cells_.begin())];
}

InversionPair BalancedTableau::cell_of_label(int i) const {
    if (i < 1 || i > label_count()) {
        throw std::invalid_argument("tableau: label out of range");
    }
    return by_label_[static_cast<size_t>(i) - 1];
}

BalancedTableau canonical_labelling(const Permutation& w, const Word& a) {
    if (a.n != w.size() || a.size() != length(w)) {
        throw std::invalid_argument("canonical_labelling: word is not reduced for w");
    }
    std::vector<InversionPair> cells = inversions(w);
    std::vector<int> labels(cells.size(), 0);
    std::vector<InversionPair> by_label(cells.size(), InversionPair{0, 0});

    std::vector<int> cur(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    int step = 0;
    for (const int letter : a.letters) {
        ++step;
        if (letter < 1 || letter >= a.n) {
            throw std::invalid_argument("canonical_labelling: letter out of range");
        }
        int& lo = cur[static_cast<size_t>(letter) - 1];
        int& hi = cur[static_cast<size_t>(letter)];
        if (lo > hi) {
            // The step would undo an inversion, so the word is not reduced.
            throw std::invalid_argument("canonical_labelling: word is not reduced for w");
        }
        const InversionPair inv{hi, lo};
        std::swap(lo, hi);
        const auto it = std::lower_bound(cells.begin(), cells.end(), inv);
        if (it == cells.end() || !(*it == inv)) {
            throw std::invalid_argument("canonical_labelling: word is not reduced for w");
        }
        labels[static_cast<size_t>(it - cells.begin())] = step;
        by_label[static_cast<size_t>(step) - 1] = inv;
    }
    if (!(Permutation(cur) == w)) {
        throw std::invalid_argument("canonical_labelling: word is not reduced for w");
    }
    return BalancedTableau(w, std::move(labels), std::move(cells), std::move(by_label));
}

bool is_balanced(const BalancedTableau& t) {
    const auto& cells = t.cells();
    for (const auto& inv : cells) {
        const RotheCell c = t.grid_cell(inv);
        const int lab = t.label(inv);
        int right_greater = 0;
        int above_smaller = 0;
        for (const auto& other : cells) {
            if (other == inv) continue;
            const RotheCell oc = t.grid_cell(other);
            const int olab = t.label(other);
            if (oc.row == c.row && oc.col > c.col && olab > lab) ++right_greater;
            if (oc.col == c.col && oc.row > c.row && olab < lab) ++above_smaller;
        }
        if (right_greater != above_smaller) return false;
    }
    return true;
}

Word word_from_tableau(const BalancedTableau& t) {
    const Permutation& w = t.perm();
    const int n = w.size();
    std::vector<int> cur(static_cast<size_t>(n));
    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        cur[static_cast<size_t>(i)] = i + 1;
        pos[static_cast<size_t>(i)] = i + 1;
    }
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(t.label_count()));
    for (int step = 1; step <= t.label_count(); ++step) {
        const InversionPair inv = t.cell_of_label(step);
        const int pq = pos[static_cast<size_t>(inv.smaller) - 1];
        const int pp = pos[static_cast<size_t>(inv.larger) - 1];
        if (pp != pq + 1) {
            throw UnrealizableTableau(
                "labelling not realizable: at step " + std::to_string(step) + " values " +
                std::to_string(inv.smaller) + " and " + std::to_string(inv.larger) +
                " are not adjacent in the required order");
        }
        letters.push_back(pq);
        std::swap(cur[static_cast<size_t>(pq) - 1], cur[static_cast<size_t>(pp) - 1]);
        std::swap(pos[static_cast<size_t>(inv.smaller) - 1],
                  pos[static_cast<size_t>(inv.larger) - 1]);
    }
    return Word(n, std::move(letters));
}

namespace {

BalancedTableau swap_labels(const BalancedTableau& t, int label_a, int label_b) {
    std::vector<std::pair<InversionPair, int>> labels;
    labels.reserve(static_cast<size_t>(t.label_count()));
    for (const auto& inv : t.cells()) {
        int lab = t.label(inv);
        if (lab == label_a) {
            lab = label_b;
        } else if (lab == label_b) {
            lab = label_a;
        }
        labels.emplace_back(inv, lab);
    }
    return BalancedTableau(t.perm(), labels);
}

}  // namespace

BalancedTableau c_move(const BalancedTableau& t, int i) {
    if (i < 1 || i >= t.label_count()) {
        throw std::invalid_argument("c_move: label out of range");
    }
    const RotheCell a = t.grid_cell(t.cell_of_label(i));
    const RotheCell b = t.grid_cell(t.cell_of_label(i + 1));
    if (a.row == b.row || a.col == b.col) {
        throw std::invalid_argument("c_move: labels " + std::to_string(i) + " and " +
                                    std::to_string(i + 1) + " share a row or column");
    }
    return swap_labels(t, i, i + 1);
}

BalancedTableau b_move(const BalancedTableau& t, int i) {
    if (i <= 1 || i >= t.label_count()) {
        throw std::invalid_argument("b_move: label out of range");
    }
    const RotheCell mid = t.grid_cell(t.cell_of_label(i));
    const RotheCell below = t.grid_cell(t.cell_of_label(i - 1));
    const RotheCell above = t.grid_cell(t.cell_of_label(i + 1));
    const auto is_above = [&](const RotheCell& c) { return c.col == mid.col && c.row > mid.row; };
    const auto is_right = [&](const RotheCell& c) { return c.row == mid.row && c.col > mid.col; };
    const bool ok = (is_above(below) && is_right(above)) || (is_above(above) && is_right(below));
    if (!ok) {
        throw std::invalid_argument("b_move: labels " + std::to_string(i - 1) + "," +
                                    std::to_string(i + 1) +
                                    " are not in the column-above/row-right configuration");
    }
    return swap_labels(t, i - 1, i + 1);
}

std::string render_grid(const BalancedTableau& t) {
    const Permutation& w = t.perm();
    const int n = w.size();
    std::vector<std::vector<int>> grid(static_cast<size_t>(n) + 1,
                                       std::vector<int>(static_cast<size_t>(n) + 1, -1));
    int max_col = 0;
    for (const auto& inv : t.cells()) {
        const RotheCell c = t.grid_cell(inv);
        grid[static_cast<size_t>(c.row)][static_cast<size_t>(c.col)] = t.label(inv);
        max_col = std::max(max_col, c.col);
    }
    const int width = t.label_count() >= 10 ? 3 : 2;
    std::ostringstream os;
    for (int row = n; row >= 1; --row) {
        os << w(row) << " |";
        for (int col = 1; col <= max_col; ++col) {
            const int lab = grid[static_cast<size_t>(row)][static_cast<size_t>(col)];
            if (lab < 0) {
                os << std::string(static_cast<size_t>(width), ' ') << ' ';
            } else {
                std::string s = std::to_string(lab);
                os << std::string(static_cast<size_t>(width) - s.size(), ' ') << s << ' ';
            }
        }
        os << '\n';
    }
    os << "  +";
    for (int col = 1; col <= max_col; ++col) os << std::string(static_cast<size_t>(width) + 1, '-');
    os << '\n' << "   ";
    for (int col = 1; col <= max_col; ++col) {
        std::string s = std::to_string(col);
        os << std::string(static_cast<size_t>(width) - s.size(), ' ') << s << ' ';
    }
    os << '\n';
    return os.str();
}

nlohmann::json tableau_to_json(const BalancedTableau& t) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& inv : t.cells()) {
        j[std::to_string(inv.larger) + "," + std::to_string(inv.smaller)] = t.label(inv);
    }
    return j;
}

BalancedTableau tableau_from_json(const Permutation& w, const nlohmann::json& j) {
    if (!j.is_object()) {
        throw std::invalid_argument("tableau json: expected an object");
    }
    std::vector<std::pair<InversionPair, int>> labels;
    for (const auto& [key, value] : j.items()) {
        const size_t comma = key.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("tableau json: bad key '" + key + "'");
        }
        InversionPair inv{};
        try {
            inv.larger = std::stoi(key.substr(0, comma));
            inv.smaller = std::stoi(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("tableau json: bad key '" + key + "'");
        }
        if (!value.is_number_integer()) {
            throw std::invalid_argument("tableau json: label for '" + key + "' is not an integer");
        }
        labels.emplace_back(inv, value.get<int>());
    }
    return BalancedTableau(w, labels);
}

}  // namespace redword

// Brute-force reference implementations used only by tests. These stay
// independent of the library code paths they check: pattern matching walks
// position subsets directly, class partitions come from word-level search
// without signatures, and tableau counts enumerate all label permutations.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "redword/permutation.hpp"
#include "redword/tableau.hpp"
#include "redword/words.hpp"

namespace oracles {

/// Pattern containment by direct enumeration of position subsets.
inline bool contains_pattern_brute(const redword::Permutation& w,
                                   const redword::Permutation& p) {
    const int n = w.size();
    const int r = p.size();
    std::vector<int> idx(static_cast<size_t>(r));
    // Walk all increasing index tuples via odometer increments.
    for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i + 1;
    if (r > n) return false;
    while (true) {
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            for (int j = i + 1; j < r && ok; ++j) {
                const bool pat_less = p(i + 1) < p(j + 1);
                const bool wit_less = w(idx[static_cast<size_t>(i)]) < w(idx[static_cast<size_t>(j)]);
                ok = (pat_less == wit_less);
            }
        }
        if (ok) return true;
        int pos = r - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - (r - 1 - pos)) --pos;
        if (pos < 0) return false;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < r; ++i) {
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i) - 1] + 1;
        }
    }
}

/// All permutations of S_n in lexicographic order.
inline std::vector<redword::Permutation> all_permutations(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::vector<redword::Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Every bijective labelling of D(w) that satisfies the balance condition,
/// found by scanning all length(w)! label assignments. Only sensible for
/// length(w) <= 7 or so.
inline std::vector<redword::BalancedTableau> all_balanced_labellings(
    const redword::Permutation& w) {
    const auto cells = redword::inversions(w);
    const int len = static_cast<int>(cells.size());
    std::vector<int> labels(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) labels[static_cast<size_t>(i)] = i + 1;
    std::vector<redword::BalancedTableau> out;
    do {
        std::vector<std::pair<redword::InversionPair, int>> assignment;
        assignment.reserve(cells.size());
        for (size_t i = 0; i < cells.size(); ++i) {
            assignment.emplace_back(cells[i], labels[i]);
        }
        redword::BalancedTableau t(w, assignment);
        if (redword::is_balanced(t)) out.push_back(std::move(t));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

/// Partition of R(w) into commutation classes by breadth-first search over
/// single commutations only; never looks at signatures. Returns the component
/// id per word, with words in lexicographic order.
struct WordPartition {
    std::vector<redword::Word> words;
    std::vector<int> component_of;
    int component_count = 0;
};

inline WordPartition word_class_partition(const redword::Permutation& w) {
    WordPartition part;
    part.words = redword::reduced_words(w, UINT64_MAX);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < part.words.size(); ++i) {
        index.emplace(part.words[i].letters, static_cast<int>(i));
    }
    part.component_of.assign(part.words.size(), -1);
    for (size_t s = 0; s < part.words.size(); ++s) {
        if (part.component_of[s] >= 0) continue;
        const int comp = part.component_count++;
        std::deque<int> queue{static_cast<int>(s)};
        part.component_of[s] = comp;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (const int pos : redword::commutation_moves(part.words[static_cast<size_t>(v)])) {
                const auto t = redword::apply_commutation(part.words[static_cast<size_t>(v)], pos);
                const int u = index.at(t.letters);
                if (part.component_of[static_cast<size_t>(u)] < 0) {
                    part.component_of[static_cast<size_t>(u)] = comp;
                    queue.push_back(u);
                }
            }
        }
    }
    return part;
}

inline redword::Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return redword::Permutation(std::move(v));
}

/// A uniformly random peel path (not a uniform word): at each step pick any
/// index whose value swap shortens the permutation.
inline redword::Word random_reduced_word(const redword::Permutation& w, std::mt19937_64& rng) {
    std::vector<int> pos(static_cast<size_t>(w.size()));
    for (int v = 1; v <= w.size(); ++v) pos[static_cast<size_t>(v) - 1] = w.position_of(v);
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(redword::length(w)));
    while (true) {
        std::vector<int> descents;
        for (int i = 1; i < w.size(); ++i) {
            if (pos[static_cast<size_t>(i)] < pos[static_cast<size_t>(i) - 1]) descents.push_back(i);
        }
        if (descents.empty()) break;
        std::uniform_int_distribution<size_t> pick(0, descents.size() - 1);
        const int i = descents[pick(rng)];
        letters.push_back(i);
        std::swap(pos[static_cast<size_t>(i) - 1], pos[static_cast<size_t>(i)]);
    }
    return redword::Word(w.size(), std::move(letters));
}

}  // namespace oracles

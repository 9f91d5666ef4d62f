#include "redword/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace redword {

std::string Word::str() const {
    if (n <= 10) {
        std::string s;
        for (const int a : letters) s.push_back(static_cast<char>('0' + a));
        return s;
    }
    std::ostringstream os;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ',';
        os << letters[i];
    }
    return os.str();
}

Word Word::parse(int n, std::string_view text) {
    std::vector<int> letters;
    if (text.empty()) {
        return Word(n, {});
    }
    if (text.find(',') != std::string_view::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            const size_t end = std::min(text.find(',', start), text.size());
            const std::string_view tok = text.substr(start, end - start);
            int v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw std::invalid_argument("word: bad token '" + std::string(tok) + "'");
            }
            letters.push_back(v);
            start = end + 1;
            if (end == text.size()) break;
        }
    } else {
        if (n > 10) {
            throw std::invalid_argument("word: digit form requires n <= 10; use commas");
        }
        for (const char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("word: bad character in digit form");
            }
            letters.push_back(c - '0');
        }
    }
    for (const int a : letters) {
        if (a < 1 || a >= n) {
            throw std::invalid_argument("word: letter " + std::to_string(a) +
                                        " out of range [1," + std::to_string(n - 1) + "]");
        }
    }
    return Word(n, std::move(letters));
}

Permutation apply_word(const Word& a) {
    std::vector<int> cur(static_cast<size_t>(a.n));
    for (int i = 0; i < a.n; ++i) cur[static_cast<size_t>(i)] = i + 1;
    for (const int letter : a.letters) {
        if (letter < 1 || letter >= a.n) {
            throw std::invalid_argument("apply_word: letter " + std::to_string(letter) +
                                        " out of range [1," + std::to_string(a.n - 1) + "]");
        }
        std::swap(cur[static_cast<size_t>(letter) - 1], cur[static_cast<size_t>(letter)]);
    }
    return Permutation(std::move(cur));
}

bool is_reduced(const Permutation& w, const Word& a) {
    if (a.n != w.size()) return false;
    if (a.size() != length(w)) return false;
    return apply_word(a) == w;
}

namespace {

// State for peeling a permutation down to the identity by value swaps.
// A "left descent" is an index i such that value i+1 currently precedes value
// i; swapping the two values shortens the permutation by one inversion.
struct PeelState {
    std::vector<int> oneline;  // 0-based storage of 1-based values
    std::vector<int> pos;      // pos[v-1] = 1-based position of value v

    explicit PeelState(const Permutation& w)
        : oneline(w.oneline()), pos(static_cast<size_t>(w.size())) {
        for (int v = 1; v <= w.size(); ++v) pos[static_cast<size_t>(v) - 1] = w.position_of(v);
    }

    int n() const { return static_cast<int>(oneline.size()); }

    bool left_descent(int i) const {
        return pos[static_cast<size_t>(i)] < pos[static_cast<size_t>(i) - 1];
    }

    void swap_values(int i) {
        const int pi = pos[static_cast<size_t>(i) - 1];
        const int pj = pos[static_cast<size_t>(i)];
        std::swap(oneline[static_cast<size_t>(pi) - 1], oneline[static_cast<size_t>(pj) - 1]);
        std::swap(pos[static_cast<size_t>(i) - 1], pos[static_cast<size_t>(i)]);
    }
};

Word extreme_word(const Permutation& w, bool greatest) {
    PeelState st(w);
    const int len = length(w);
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(len));
    for (int step = 0; step < len; ++step) {
        int chosen = 0;
        if (greatest) {
            for (int i = st.n() - 1; i >= 1; --i) {
                if (st.left_descent(i)) { chosen = i; break; }
            }
        } else {
            for (int i = 1; i <= st.n() - 1; ++i) {
                if (st.left_descent(i)) { chosen = i; break; }
            }
        }
        // Each swap removes one inversion, so a descent exists at every step.
        if (chosen == 0) throw std::logic_error("extreme_word: ran out of descents");
        letters.push_back(chosen);
        st.swap_values(chosen);
    }
    return Word(w.size(), std::move(letters));
}

struct Enumerator {
    std::uint64_t cap;
    std::uint64_t emitted = 0;
    const std::function<void(const Word&)>* yield;
    int n;
    std::vector<int> prefix;

    // Depth-first over left descents in ascending order; the word grows front
    // to back, so emission is lexicographic.
    bool recurse(PeelState& st, int remaining) {
        if (remaining == 0) {
            if (emitted == cap) return false;
            ++emitted;
            (*yield)(Word(n, prefix));
            return true;
        }
        for (int i = 1; i <= n - 1; ++i) {
            if (!st.left_descent(i)) continue;
            st.swap_values(i);
            prefix.push_back(i);
            const bool keep_going = recurse(st, remaining - 1);
            prefix.pop_back();
            st.swap_values(i);
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

Word a_min(const Permutation& w) { return extreme_word(w, /*greatest=*/false); }

Word a_max(const Permutation& w) { return extreme_word(w, /*greatest=*/true); }

EnumStatus enumerate_reduced_words(const Permutation& w, std::uint64_t cap,
                                   const std::function<void(const Word&)>& yield) {
    PeelState st(w);
    Enumerator e;
    e.cap = cap;
    e.yield = &yield;
    e.n = w.size();
    e.prefix.reserve(static_cast<size_t>(length(w)));
    const bool complete = e.recurse(st, length(w));
    return complete ? EnumStatus::complete : EnumStatus::truncated;
}

std::vector<Word> reduced_words(const Permutation& w, std::uint64_t cap, EnumStatus* status) {
    std::vector<Word> out;
    const EnumStatus st =
        enumerate_reduced_words(w, cap, [&](const Word& a) { out.push_back(a); });
    if (status) *status = st;
    return out;
}

std::vector<int> commutation_moves(const Word& a) {
    std::vector<int> out;
    for (int i = 1; i < a.size(); ++i) {
        if (std::abs(a.letters[static_cast<size_t>(i) - 1] - a.letters[static_cast<size_t>(i)]) >=
            2) {
            out.push_back(i);
        }
    }
    return out;
}

Word apply_commutation(const Word& a, int i) {
    if (i < 1 || i >= a.size() ||
        std::abs(a.letters[static_cast<size_t>(i) - 1] - a.letters[static_cast<size_t>(i)]) < 2) {
        throw std::invalid_argument("apply_commutation: no commutation at position " +
                                    std::to_string(i));
    }
    Word out = a;
    std::swap(out.letters[static_cast<size_t>(i) - 1], out.letters[static_cast<size_t>(i)]);
    return out;
}

std::vector<int> braid_moves(const Word& a) {
    std::vector<int> out;
    for (int j = 2; j + 1 <= a.size(); ++j) {
        const int left = a.letters[static_cast<size_t>(j) - 2];
        const int mid = a.letters[static_cast<size_t>(j) - 1];
        const int right = a.letters[static_cast<size_t>(j)];
        if (left == right && std::abs(mid - left) == 1) out.push_back(j);
    }
    return out;
}

Word apply_braid(const Word& a, int j) {
    if (j < 2 || j + 1 > a.size()) {
        throw std::invalid_argument("apply_braid: center out of range");
    }
    const int left = a.letters[static_cast<size_t>(j) - 2];
    const int mid = a.letters[static_cast<size_t>(j) - 1];
    const int right = a.letters[static_cast<size_t>(j)];
    if (left != right || std::abs(mid - left) != 1) {
        throw std::invalid_argument("apply_braid: no braid factor centered at " +
                                    std::to_string(j));
    }
    Word out = a;
    out.letters[static_cast<size_t>(j) - 2] = mid;
    out.letters[static_cast<size_t>(j) - 1] = left;
    out.letters[static_cast<size_t>(j)] = mid;
    return out;
}

}  // namespace redword

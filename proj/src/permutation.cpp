#include "redword/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace redword {

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    const int n = static_cast<int>(oneline_.size());
    if (n == 0) {
        throw std::invalid_argument("permutation: empty input");
    }
    positions_.assign(static_cast<size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int v = oneline_[static_cast<size_t>(i) - 1];
        if (v < 1 || v > n) {
            throw std::invalid_argument("permutation: value " + std::to_string(v) +
                                        " out of range [1," + std::to_string(n) + "]");
        }
        if (positions_[static_cast<size_t>(v) - 1] != 0) {
            throw std::invalid_argument("permutation: repeated value " + std::to_string(v));
        }
        positions_[static_cast<size_t>(v) - 1] = i;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(v));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        size_t start = 0;
        while (start <= text.size()) {
            const size_t end = std::min(text.find(',', start), text.size());
            const std::string_view tok = text.substr(start, end - start);
            int v = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw std::invalid_argument("permutation: bad token '" + std::string(tok) + "'");
            }
            values.push_back(v);
            start = end + 1;
            if (end == text.size()) break;
        }
    } else {
        if (text.empty()) {
            throw std::invalid_argument("permutation: empty input");
        }
        if (text.size() > 9) {
            throw std::invalid_argument(
                "permutation: bare digit form is limited to n <= 9; use commas");
        }
        for (const char c : text) {
            if (c < '1' || c > '9') {
                throw std::invalid_argument("permutation: bad character in digit form");
            }
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

Permutation Permutation::inverse() const {
    return Permutation(positions_);
}

Permutation Permutation::compose(const Permutation& v) const {
    if (size() != v.size()) {
        throw std::invalid_argument("compose: size mismatch");
    }
    std::vector<int> out(static_cast<size_t>(size()));
    for (int i = 1; i <= size(); ++i) {
        out[static_cast<size_t>(i) - 1] = (*this)(v(i));
    }
    return Permutation(std::move(out));
}

std::string Permutation::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < oneline_.size(); ++i) {
        if (i) os << ',';
        os << oneline_[i];
    }
    return os.str();
}

std::string Permutation::compact_str() const {
    if (size() > 9) return str();
    std::string s;
    for (const int v : oneline_) s.push_back(static_cast<char>('0' + v));
    return s;
}

bool Permutation::operator==(const Permutation& o) const {
    return oneline_ == o.oneline_;
}

std::vector<InversionPair> inversions(const Permutation& w) {
    std::vector<InversionPair> out;
    const int n = w.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) out.push_back({w(i), w(j)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int length(const Permutation& w) {
    int count = 0;
    const int n = w.size();
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) > w(j)) ++count;
        }
    }
    return count;
}

std::vector<int> descent_set(const Permutation& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i) {
        if (w(i) > w(i + 1)) out.push_back(i);
    }
    return out;
}

std::vector<Triple321> triples_321(const Permutation& w) {
    // (x,y,z) with z before y before x in w, i.e. positions of z,y,x increase.
    std::vector<Triple321> out;
    const int n = w.size();
    for (int x = 1; x <= n; ++x) {
        for (int y = x + 1; y <= n; ++y) {
            if (w.position_of(y) >= w.position_of(x)) continue;
            for (int z = y + 1; z <= n; ++z) {
                if (w.position_of(z) < w.position_of(y)) out.push_back({x, y, z});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RotheCell> rothe_diagram(const Permutation& w) {
    std::vector<RotheCell> out;
    for (const auto& inv : inversions(w)) {
        out.push_back({w.position_of(inv.larger), inv.smaller});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool match_from(const Permutation& w, const Permutation& p, int pos, int picked,
                std::vector<int>& chosen) {
    const int n = w.size();
    const int r = p.size();
    if (picked == r) return true;
    if (n - pos + 1 < r - picked) return false;
    for (int i = pos; i <= n; ++i) {
        bool ok = true;
        // The candidate value must compare against all chosen ones the way the
        // pattern dictates.
        for (int k = 0; k < picked && ok; ++k) {
            const bool want_less = p(picked + 1) < p(k + 1);
            const bool is_less = w(i) < chosen[static_cast<size_t>(k)];
            ok = (want_less == is_less);
        }
        if (!ok) continue;
        chosen.push_back(w(i));
        if (match_from(w, p, i + 1, picked + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains_pattern(const Permutation& w, const Permutation& p) {
    if (p.size() > w.size()) {
        throw std::invalid_argument("contains_pattern: pattern longer than word");
    }
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(p.size()));
    return match_from(w, p, 1, 0, chosen);
}

bool is_fully_commutative(const Permutation& w) {
    if (w.size() < 3) return true;
    return !contains_pattern(w, Permutation({3, 2, 1}));
}

std::optional<int> unimodal_peak(const Permutation& w) {
    const int n = w.size();
    const int peak = w.position_of(n);
    for (int i = 1; i < peak; ++i) {
        if (w(i) > w(i + 1)) return std::nullopt;
    }
    for (int i = peak; i < n; ++i) {
        if (w(i) < w(i + 1)) return std::nullopt;
    }
    return peak;
}

}  // namespace redword

// Closed-form diameter results and the exhaustive sweep comparing them with
// breadth-first ground truth.
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "redword/commgraph.hpp"
#include "redword/permutation.hpp"

namespace redword {

/// binom(m, r); zero when m < r or r < 0.
long long binomial(long long m, long long r);

/// Diameter of the class graph of w: the number of 321-triples.
int diameter_formula(const Permutation& w);

/// Diameter for the longest element of S_n: binom(n, 3).
long long longest_diameter(int n);

/// Diameter of a unimodal permutation with peak i:
/// binom(n-i+1, 3) + sum_{k<i} binom(w_k - k, 2). Throws when w is not
/// unimodal.
long long unimodal_diameter(const Permutation& w);

struct DiameterBounds {
    long long lower = 0;
    long long upper = 0;
    int k = 0;  // length deficiency
    int n = 0;
};

/// Interval containing the diameter of every w in S_n whose length falls short
/// of the maximum by k: [delta - k(n-2), delta - k(n-2) + binom(k,2)].
DiameterBounds diameter_bounds(int n, int k);

struct TopDiametersReport {
    bool ok = true;
    std::vector<long long> expected;  // delta, delta-n+2, delta-2n+5, delta-2n+4
    std::vector<long long> observed;  // four largest distinct diameters over S_n
    std::vector<std::string> violations;
};

/// Scans S_n (n >= 4) and verifies that the four largest distinct diameters
/// and their witness permutations are the expected ones.
TopDiametersReport top_diameters_check(int n);

enum class SweepMode { formula_only, full_bfs };

struct SweepOptions {
    int threads = 0;
    std::uint64_t word_cap = 1'000'000;
    std::uint64_t class_cap = 100'000;
};

struct SweepRow {
    std::string w;  // comma form
    int length = 0;
    int t_count = 0;
    int formula_diameter = 0;
    std::optional<int> bfs_diameter;
    std::optional<std::uint64_t> class_count;
    std::optional<int> radius;
    long long bounds_lower = 0;
    long long bounds_upper = 0;
    std::optional<int> unimodal_peak;
    bool pass = true;
    std::string note;
};

struct SweepSummary {
    int n = 0;
    SweepMode mode = SweepMode::formula_only;
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::optional<std::string> first_failure;  // comma form of the offending w
    bool all_pass() const { return passed == total; }
};

/// Checks every w in S_n. Formula mode verifies the interval bound, the
/// unimodal formula where applicable and the fully-commutative equivalence;
/// full BFS mode additionally builds the class graph and compares its BFS
/// diameter with the triple count. Rows are delivered in lexicographic order
/// of w regardless of the thread count.
SweepSummary verify_sweep(int n, SweepMode mode, const SweepOptions& opts = {},
                          const std::function<void(const SweepRow&)>& row_sink = nullptr);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const SweepRow& row);

/// Named witnesses used by the top-diameter classification.
Permutation witness_second(int n);  // (n-1) n (n-2) ... 2 1
Permutation witness_third(int n);   // (n-2) n (n-1) (n-3) ... 2 1
Permutation witness_fourth(int n);  // (n-1) n (n-2) (n-3) ... 4 3 1 2

}  // namespace redword

#include "redword/formulas.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace redword {

long long binomial(long long m, long long r) {
    if (r < 0 || m < r) return 0;
    r = std::min(r, m - r);
    long long result = 1;
    for (long long i = 1; i <= r; ++i) {
        result = result * (m - r + i) / i;
    }
    return result;
}

int diameter_formula(const Permutation& w) {
    return static_cast<int>(triples_321(w).size());
}

long long longest_diameter(int n) {
    if (n < 1) throw std::invalid_argument("longest_diameter: n must be positive");
    return binomial(n, 3);
}

long long unimodal_diameter(const Permutation& w) {
    const auto peak = unimodal_peak(w);
    if (!peak) {
        throw std::invalid_argument("unimodal_diameter: permutation is not unimodal");
    }
    const int n = w.size();
    const int i = *peak;
    long long result = binomial(n - i + 1, 3);
    for (int k = 1; k < i; ++k) {
        result += binomial(w(k) - k, 2);
    }
    return result;
}

DiameterBounds diameter_bounds(int n, int k) {
    if (n < 1) throw std::invalid_argument("diameter_bounds: n must be positive");
    if (k < 0 || k > binomial(n, 2)) {
        throw std::invalid_argument("diameter_bounds: k out of range [0, binom(n,2)]");
    }
    DiameterBounds b;
    b.n = n;
    b.k = k;
    b.lower = binomial(n, 3) - static_cast<long long>(k) * (n - 2);
    b.upper = b.lower + binomial(k, 2);
    return b;
}

Permutation witness_second(int n) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    v.push_back(n - 1);
    v.push_back(n);
    for (int x = n - 2; x >= 1; --x) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation witness_third(int n) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    v.push_back(n - 2);
    v.push_back(n);
    v.push_back(n - 1);
    for (int x = n - 3; x >= 1; --x) v.push_back(x);
    return Permutation(std::move(v));
}

Permutation witness_fourth(int n) {
    std::vector<int> v;
    v.reserve(static_cast<size_t>(n));
    v.push_back(n - 1);
    v.push_back(n);
    for (int x = n - 2; x >= 3; --x) v.push_back(x);
    v.push_back(1);
    v.push_back(2);
    return Permutation(std::move(v));
}

TopDiametersReport top_diameters_check(int n) {
    if (n < 4) {
        throw std::invalid_argument("top_diameters_check: requires n >= 4");
    }
    TopDiametersReport report;
    const long long delta = binomial(n, 3);
    report.expected = {delta, delta - n + 2, delta - 2 * n + 5, delta - 2 * n + 4};

    const auto fail = [&](std::string msg) {
        report.ok = false;
        report.violations.push_back(std::move(msg));
    };

    std::map<long long, std::uint64_t, std::greater<>> counts;
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
    do {
        ++counts[diameter_formula(Permutation(v))];
    } while (std::next_permutation(v.begin(), v.end()));

    for (const auto& [value, count] : counts) {
        if (static_cast<int>(report.observed.size()) == 4) break;
        report.observed.push_back(value);
    }
    if (report.observed != report.expected) {
        fail("four largest distinct diameters do not match the expected values");
    }
    if (counts.count(delta) == 0 || counts.at(delta) != 1) {
        fail("the top diameter is not attained by a unique permutation");
    }
    const Permutation longest = Permutation::reversal(n);
    if (diameter_formula(longest) != delta) {
        fail("longest element does not attain the top diameter");
    }
    const struct {
        const char* name;
        Permutation w;
        long long value;
    } witnesses[] = {
        {"second", witness_second(n), delta - n + 2},
        {"third", witness_third(n), delta - 2 * n + 5},
        {"fourth", witness_fourth(n), delta - 2 * n + 4},
    };
    for (const auto& wit : witnesses) {
        if (diameter_formula(wit.w) != wit.value) {
            fail(std::string("witness ") + wit.name + " (" + wit.w.str() + ") has diameter " +
                 std::to_string(diameter_formula(wit.w)) + ", expected " +
                 std::to_string(wit.value));
        }
    }
    return report;
}

namespace {

SweepRow sweep_one(const Permutation& w, SweepMode mode, const SweepOptions& opts) {
    SweepRow row;
    row.w = w.str();
    row.length = length(w);
    row.t_count = diameter_formula(w);
    row.formula_diameter = row.t_count;
    const int n = w.size();

    const auto fail = [&](const std::string& note) {
        row.pass = false;
        if (!row.note.empty()) row.note += "; ";
        row.note += note;
    };

    const int k = static_cast<int>(binomial(n, 2)) - row.length;
    const DiameterBounds bounds = diameter_bounds(n, k);
    row.bounds_lower = bounds.lower;
    row.bounds_upper = bounds.upper;
    if (row.t_count < bounds.lower || row.t_count > bounds.upper) {
        fail("diameter outside the length-deficiency interval");
    }

    row.unimodal_peak = unimodal_peak(w);
    if (row.unimodal_peak && unimodal_diameter(w) != row.t_count) {
        fail("unimodal formula disagrees with the triple count");
    }

    const bool fc = is_fully_commutative(w);
    if (fc != (row.t_count == 0)) {
        fail("fully-commutative status disagrees with the triple count");
    }

    if (mode == SweepMode::full_bfs) {
        BuildOptions build_opts;
        build_opts.word_cap = opts.word_cap;
        build_opts.class_cap = opts.class_cap;
        build_opts.threads = 1;  // the sweep owns the parallelism
        CommGraph g = build_graph(w, build_opts);
        if (g.partial) {
            fail("graph construction hit a cap");
        } else {
            const GraphMetrics m = metrics(g, 1);
            row.bfs_diameter = m.diameter;
            row.class_count = g.classes.size();
            row.radius = m.radius;
            if (m.diameter != row.t_count) {
                fail("BFS diameter disagrees with the triple count");
            }
            if (fc != (g.classes.size() == 1)) {
                fail("class count disagrees with fully-commutative status");
            }
        }
    }
    return row;
}

}  // namespace

SweepSummary verify_sweep(int n, SweepMode mode, const SweepOptions& opts,
                          const std::function<void(const SweepRow&)>& row_sink) {
    if (n < 1) throw std::invalid_argument("verify_sweep: n must be positive");
    SweepSummary summary;
    summary.n = n;
    summary.mode = mode;

    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;

    // Process in lexicographic chunks so rows can stream in order while the
    // chunk body runs in parallel.
    constexpr int kChunk = 512;
    std::vector<Permutation> batch;
    batch.reserve(kChunk);
    bool more = true;
#ifdef _OPENMP
    const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#endif
    while (more) {
        batch.clear();
        while (static_cast<int>(batch.size()) < kChunk && more) {
            batch.emplace_back(v);
            more = std::next_permutation(v.begin(), v.end());
        }
        std::vector<SweepRow> rows(batch.size());
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(batch.size()); ++i) {
            rows[static_cast<size_t>(i)] = sweep_one(batch[static_cast<size_t>(i)], mode, opts);
        }
        for (const SweepRow& row : rows) {
            ++summary.total;
            if (row.pass) {
                ++summary.passed;
            } else if (!summary.first_failure) {
                summary.first_failure = row.w;
            }
            if (row_sink) row_sink(row);
        }
    }
    return summary;
}

void write_csv_header(std::ostream& os) {
    os << "w,length,t_count,formula_diameter,bfs_diameter,class_count,radius,"
          "bounds_lower,bounds_upper,unimodal_peak,result\n";
}

void write_csv_row(std::ostream& os, const SweepRow& row) {
    os << '"' << row.w << '"' << ',' << row.length << ',' << row.t_count << ','
       << row.formula_diameter << ',';
    if (row.bfs_diameter) os << *row.bfs_diameter;
    os << ',';
    if (row.class_count) os << *row.class_count;
    os << ',';
    if (row.radius) os << *row.radius;
    os << ',' << row.bounds_lower << ',' << row.bounds_upper << ',';
    if (row.unimodal_peak) os << *row.unimodal_peak;
    os << ',' << (row.pass ? "pass" : "fail") << '\n';
}

}  // namespace redword

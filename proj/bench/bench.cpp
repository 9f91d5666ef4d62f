// Timing comparison between the serial reference paths and the OpenMP
// kernels: all-source BFS eccentricities, class-graph construction, and the
// full verification sweep.
//
// Usage: redword_bench [repeats]
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "redword/commgraph.hpp"
#include "redword/formulas.hpp"
#include "redword/permutation.hpp"

using namespace redword;

namespace {

double time_once(const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double time_best(int repeats, const std::function<void()>& body) {
    double best = 1e30;
    for (int r = 0; r < repeats; ++r) best = std::min(best, time_once(body));
    return best;
}

void report(const std::string& name, double serial, double parallel) {
    std::cout << std::left << std::setw(44) << name << std::right << std::fixed
              << std::setprecision(4) << std::setw(10) << serial << " s" << std::setw(10)
              << parallel << " s" << std::setw(9) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    std::cout << "threads available: " << max_threads << ", repeats per measurement: " << repeats
              << "\n\n";
    std::cout << std::left << std::setw(44) << "workload" << std::right << std::setw(12)
              << "serial" << std::setw(12) << "parallel" << std::setw(10) << "speedup\n";

    // All-source BFS on the class graph of the longest element of S_6
    // (908 vertices), run many times to make the kernel measurable.
    {
        const Permutation w = Permutation::reversal(6);
        CommGraph g = build_graph(w);
        constexpr int kRounds = 200;
        const double serial = time_best(repeats, [&] {
            for (int i = 0; i < kRounds; ++i) {
                volatile int sink = eccentricities_serial(g.adjacency).front();
                (void)sink;
            }
        });
        const double parallel = time_best(repeats, [&] {
            for (int i = 0; i < kRounds; ++i) {
                volatile int sink = eccentricities_parallel(g.adjacency, max_threads).front();
                (void)sink;
            }
        });
        report("eccentricities of C(654321) x200", serial, parallel);
    }

    // Class-graph construction for the longest element of S_6: the closure
    // expansion of each frontier level is the parallel loop.
    {
        const Permutation w = Permutation::reversal(6);
        BuildOptions serial_opts;
        serial_opts.threads = 1;
        BuildOptions parallel_opts;
        parallel_opts.threads = max_threads;
        size_t sink = 0;
        const double serial =
            time_best(repeats, [&] { sink += build_graph(w, serial_opts).classes.size(); });
        const double parallel =
            time_best(repeats, [&] { sink += build_graph(w, parallel_opts).classes.size(); });
        if (sink == 0) std::cout << "";
        report("build_graph(654321), 908 classes", serial, parallel);
    }

    // Full BFS sweep across S_5: one graph per permutation.
    {
        SweepOptions serial_opts;
        serial_opts.threads = 1;
        SweepOptions parallel_opts;
        parallel_opts.threads = max_threads;
        const double serial = time_best(
            repeats, [&] { verify_sweep(5, SweepMode::full_bfs, serial_opts); });
        const double parallel = time_best(
            repeats, [&] { verify_sweep(5, SweepMode::full_bfs, parallel_opts); });
        report("verify_sweep S_5 full BFS", serial, parallel);
    }

    // Formula-only sweep across S_7: pure counting, no graphs.
    {
        SweepOptions serial_opts;
        serial_opts.threads = 1;
        SweepOptions parallel_opts;
        parallel_opts.threads = max_threads;
        const double serial = time_best(
            repeats, [&] { verify_sweep(7, SweepMode::formula_only, serial_opts); });
        const double parallel = time_best(
            repeats, [&] { verify_sweep(7, SweepMode::formula_only, parallel_opts); });
        report("verify_sweep S_7 formula only", serial, parallel);
    }

    return 0;
}

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "canon/cli.hpp"
#include "canon/fpp.hpp"
#include "canon/ice.hpp"
#include "canon/oracle.hpp"
#include "canon/parallel.hpp"
#include "canon/plane_graph.hpp"
#include "canon/well_formed.hpp"

using namespace canon;

namespace {

// Best wall time over reps, in seconds.
double best_of(int reps, const std::function<void()> &f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void row(const char *name, double serial, double parallel, bool agree) {
    std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
                agree ? "agree" : "DIFFER");
}

std::string planar_count(const std::string &doc, int threads) {
    const std::string t = std::to_string(threads);
    const char *argv[] = {"canon_cli", "enumerate", "orientations", "--mode", "planar", "--format", "count",
                          "--threads", t.c_str()};
    std::istringstream in(doc);
    std::ostringstream out, err;
    if (run_cli(9, argv, in, out, err) != 0)
        throw GraphError(err.str());
    return out.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Serial vs OpenMP timings"};
    int threads = 0, reps = 3, planar_n = 40, check_n = 1500;
    std::uint64_t seed = 7;
    app.add_option("--threads", threads, "OpenMP threads, 0 for the default");
    app.add_option("--reps", reps, "repetitions, best time is reported")->check(CLI::PositiveNumber);
    app.add_option("--planar-n", planar_n, "vertices for the planar-mode workload")->check(CLI::Range(4, 200));
    app.add_option("--check-n", check_n, "vertices for the segment-checker workload")->check(CLI::Range(4, 100000));
    app.add_option("--seed", seed);
    CLI11_PARSE(app, argc, argv);

    if (threads > 0)
        omp_set_num_threads(threads);
    const int nt = resolve_threads(threads);
    std::printf("threads=%d cores=%d reps=%d\n", nt, omp_get_num_procs(), reps);
    std::printf("%-34s %10s %10s %9s\n", "workload", "serial_s", "omp_s", "speedup");

    {
        // m = 24 is the brute-force ceiling
        auto g = random_flipped_triangulation(10, 80, seed);
        OrientationSet a, b;
        double s = best_of(reps, [&] { a = brute_force_orientations_serial(g); });
        double p = best_of(reps, [&] { b = brute_force_orientations(g); });
        row("brute-force orientations n=10", s, p, a == b);
    }
    {
        auto g = random_flipped_triangulation(check_n, 10 * check_n, seed);
        WellFormedGraph w(g);
        CanonicalOrientation first;
        {
            IceEnumerator it(w);
            it.next();
            first = snapshot_orientation(w, g.outer());
        }
        auto d = canonical_drawing(g, first);
        Verdict a, b;
        double s = best_of(reps, [&] { a = check_planar_straightline_serial(g, d); });
        double p = best_of(reps, [&] { b = check_planar_straightline(g, d); });
        std::string name = "segment check n=" + std::to_string(check_n);
        row(name.c_str(), s, p, a.ok && b.ok);
    }
    {
        const std::string doc = to_document(random_flipped_triangulation(planar_n, 10 * planar_n, seed));
        std::string a, b;
        double s = best_of(reps, [&] { a = planar_count(doc, 1); });
        double p = best_of(reps, [&] { b = planar_count(doc, nt); });
        std::string name = "planar-mode count n=" + std::to_string(planar_n);
        row(name.c_str(), s, p, a == b);
        std::printf("planar-mode records: %s", a.c_str());
    }
    return 0;
}

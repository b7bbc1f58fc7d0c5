// Times the Monte Carlo kernels with the serial reference driver and with
// the OpenMP driver, and insists the two produce bit-identical estimates:
// the strand decomposition, not the thread count, owns the sample-to-stream
// assignment, so any worker count must reproduce the serial numbers exactly.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <omp.h>

#include "turnwalk/rmt.hpp"

namespace {

using turnwalk::MomentEstimate;

double seconds_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool identical(const MomentEstimate& a, const MomentEstimate& b) {
    return a.mean == b.mean && a.standard_error == b.standard_error && a.samples == b.samples;
}

template <class Fn>
int bench_one(const char* name, std::int64_t samples, int workers, Fn&& run) {
    auto t0 = std::chrono::steady_clock::now();
    const MomentEstimate serial = run(1);
    const double serial_time = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const MomentEstimate parallel = run(workers);
    const double parallel_time = seconds_since(t0);

    const bool same = identical(serial, parallel);
    std::printf("%-18s %9lld samples  serial %7.3fs  omp(%d) %7.3fs  speedup %5.2fx  %s\n",
                name, static_cast<long long>(samples), serial_time, workers, parallel_time,
                serial_time / parallel_time, same ? "identical" : "MISMATCH");
    return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    std::int64_t samples = 200000;
    int workers = omp_get_max_threads();
    std::uint64_t seed = 1729;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--samples") == 0) samples = std::atoll(argv[i + 1]);
        if (std::strcmp(argv[i], "--workers") == 0) workers = std::atoi(argv[i + 1]);
        if (std::strcmp(argv[i], "--seed") == 0) seed = std::strtoull(argv[i + 1], nullptr, 10);
    }
    std::printf("strand size %lld, seed %llu\n",
                static_cast<long long>(turnwalk::mc::kStrandSize),
                static_cast<unsigned long long>(seed));

    int failures = 0;
    failures += bench_one("trace moment", samples, workers, [&](int w) {
        return turnwalk::mc_trace_moment(2, 8, 2, samples, seed, w);
    });
    failures += bench_one("unitary side", samples, workers, [&](int w) {
        return turnwalk::mc_unitary_side(2, 1, 0.3, samples, seed, w);
    });
    failures += bench_one("truncation side", samples, workers, [&](int w) {
        return turnwalk::mc_truncation_side(2, 1, 0.3, samples, seed, w);
    });
    failures += bench_one("hall product", samples / 4, workers, [&](int w) {
        return turnwalk::hall_product_mc(turnwalk::YoungDiagram({1}),
                                         turnwalk::YoungDiagram({1}), 2, samples / 4, seed, w);
    });
    return failures == 0 ? 0 : 1;
}

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <omp.h>

#include "turnwalk/rng.hpp"

namespace turnwalk {

/// A Monte Carlo estimate together with everything needed to reproduce it.
struct MomentEstimate {
    std::complex<double> mean{0.0, 0.0};
    double standard_error = 0.0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t stream_base = 0;
    int strand_count = 0;
    bool complex_mean = false;

    double real_mean() const { return mean.real(); }
};

namespace mc {

/// Samples per strand.  The strand decomposition is a function of the sample
/// count alone, never of the thread count, so any --workers value reproduces
/// the same estimate bit for bit.
inline constexpr std::int64_t kStrandSize = 4096;

struct StrandPartial {
    double sum_re = 0.0;
    double sum_im = 0.0;
    double sum_abs2 = 0.0;
    std::int64_t count = 0;
};

inline int strand_count_for(std::int64_t samples) {
    return static_cast<int>((samples + kStrandSize - 1) / kStrandSize);
}

/// Evaluate one strand serially: strand s owns sample indices
/// [s*kStrandSize, min((s+1)*kStrandSize, samples)) and the RNG substream
/// (seed, stream_base + s).
template <class SampleFn>
StrandPartial run_strand(std::int64_t samples, std::uint64_t seed, std::uint64_t stream_base,
                         int strand, SampleFn&& fn) {
    RngStream rng(seed, stream_base + static_cast<std::uint64_t>(strand));
    const std::int64_t begin = static_cast<std::int64_t>(strand) * kStrandSize;
    const std::int64_t end = std::min(begin + kStrandSize, samples);
    StrandPartial p;
    for (std::int64_t i = begin; i < end; ++i) {
        const std::complex<double> v = fn(rng);
        p.sum_re += v.real();
        p.sum_im += v.imag();
        p.sum_abs2 += std::norm(v);
        ++p.count;
    }
    return p;
}

/// Serial reference: strands evaluated one after another in index order.
template <class SampleFn>
std::vector<StrandPartial> run_strands_serial(std::int64_t samples, std::uint64_t seed,
                                              std::uint64_t stream_base, SampleFn&& fn) {
    std::vector<StrandPartial> partials(static_cast<std::size_t>(strand_count_for(samples)));
    for (int s = 0; s < static_cast<int>(partials.size()); ++s)
        partials[static_cast<std::size_t>(s)] = run_strand(samples, seed, stream_base, s, fn);
    return partials;
}

/// OpenMP kernel: strands evaluated concurrently, stored by strand index.
template <class SampleFn>
std::vector<StrandPartial> run_strands_parallel(std::int64_t samples, std::uint64_t seed,
                                                std::uint64_t stream_base, int workers,
                                                SampleFn&& fn) {
    const int n = strand_count_for(samples);
    std::vector<StrandPartial> partials(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int s = 0; s < n; ++s)
        partials[static_cast<std::size_t>(s)] = run_strand(samples, seed, stream_base, s, fn);
    return partials;
}

/// Fold partials in strand order; identical input order gives identical
/// floating-point sums, which is what makes the two drivers interchangeable.
MomentEstimate merge_partials(const std::vector<StrandPartial>& partials, std::uint64_t seed,
                              std::uint64_t stream_base, bool complex_mean);

template <class SampleFn>
MomentEstimate estimate(std::int64_t samples, std::uint64_t seed, std::uint64_t stream_base,
                        int workers, bool complex_mean, SampleFn&& fn) {
    if (samples < 2) throw std::invalid_argument("mc::estimate: need at least 2 samples");
    auto partials = workers > 1
                        ? run_strands_parallel(samples, seed, stream_base, workers, fn)
                        : run_strands_serial(samples, seed, stream_base, fn);
    return merge_partials(partials, seed, stream_base, complex_mean);
}

}  // namespace mc
}  // namespace turnwalk

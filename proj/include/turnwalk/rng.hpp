#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace turnwalk {

/// A reproducible substream of pseudo-random numbers.  Distinct
/// (seed, stream) pairs give decorrelated sequences; the same pair always
/// replays the same sequence.  Gaussian variates are produced by an explicit
/// Box-Muller transform so the draw count per variate is fixed and the
/// output does not depend on the standard library's distribution internals.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform();

    /// Standard complex Gaussian: density exp(-|z|^2)/pi, so E|z|^2 = 1.
    std::complex<double> gaussian_complex();

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to spread (seed, stream) pairs over seed space.
std::uint64_t mix_u64(std::uint64_t x);

}  // namespace turnwalk

#include "turnwalk/mc.hpp"

namespace turnwalk {
namespace mc {

MomentEstimate merge_partials(const std::vector<StrandPartial>& partials, std::uint64_t seed,
                              std::uint64_t stream_base, bool complex_mean) {
    double sum_re = 0.0;
    double sum_im = 0.0;
    double sum_abs2 = 0.0;
    std::int64_t n = 0;
    for (const StrandPartial& p : partials) {
        sum_re += p.sum_re;
        sum_im += p.sum_im;
        sum_abs2 += p.sum_abs2;
        n += p.count;
    }

    MomentEstimate est;
    est.samples = n;
    est.seed = seed;
    est.stream_base = stream_base;
    est.strand_count = static_cast<int>(partials.size());
    est.complex_mean = complex_mean;
    const double dn = static_cast<double>(n);
    est.mean = {sum_re / dn, sum_im / dn};

    // Sample variance of the (possibly complex) values; rounding can push the
    // difference of the two accumulated sums slightly negative, so clamp.
    double var = (sum_abs2 - dn * std::norm(est.mean)) / (dn - 1.0);
    if (var < 0.0) var = 0.0;
    est.standard_error = std::sqrt(var / dn);
    return est;
}

}  // namespace mc
}  // namespace turnwalk

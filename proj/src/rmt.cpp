#include "turnwalk/rmt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "turnwalk/enumeration.hpp"
#include "turnwalk/series.hpp"

namespace turnwalk {

namespace {

constexpr double kPi = std::numbers::pi;

double ipow(double base, std::int64_t e) {
    double r = 1.0;
    for (std::int64_t k = 0; k < e; ++k) r *= base;
    return r;
}

std::complex<double> cpow(std::complex<double> base, std::int64_t e) {
    std::complex<double> r{1.0, 0.0};
    for (std::int64_t k = 0; k < e; ++k) r *= base;
    return r;
}

/// Phase-fixed thin QR of a rows x cols Ginibre matrix: a Haar-distributed
/// orthonormal frame, and for cols == rows a Haar unitary.  The leading
/// reflectors of a square QR depend only on the leading columns, so the
/// frame coincides column for column with the full construction.
ComplexMatrix stiefel_frame(int rows, int cols, RngStream& rng) {
    ComplexMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) g(i, j) = rng.gaussian_complex();
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(rows, cols);
    for (int j = 0; j < cols; ++j) {
        const std::complex<double> r = qr.matrixQR()(j, j);
        const double a = std::abs(r);
        const std::complex<double> phase = a > 0.0 ? r / a : std::complex<double>{1.0, 0.0};
        q.col(j) *= phase;
    }
    return q;
}

double mpz_to_double(const mpz_class& z) { return z.get_d(); }

/// Natural log of a positive big integer, exponent-aware so huge values
/// stay finite.
double mpz_log(const mpz_class& z) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

double log_asymptotic_rhs(int d, std::int64_t n, std::int64_t q) {
    double lg = 0.5 * (1.0 - d) * std::log(2.0 * kPi);
    for (int i = 2; i < d; ++i) lg += std::lgamma(static_cast<double>(i) + 1.0);
    lg += (3.0 * static_cast<double>(n) + static_cast<double>(d) * static_cast<double>(q) + 0.5) *
          std::log(static_cast<double>(d));
    lg += (static_cast<double>(n) + 0.5 * (1.0 - static_cast<double>(d) * d)) *
          std::log(static_cast<double>(q));
    return lg;
}

MomentEstimate scale_estimate(MomentEstimate est, double factor) {
    est.mean *= factor;
    est.standard_error *= std::abs(factor);
    return est;
}

/// G_d(x;q) as a double, from the exact determinant series: the Bessel
/// entries decay factorially, so a modest order is exact to double
/// precision for |x| <= 1.
double series_reference_value(int d, std::int64_t q, double x, std::int64_t order = 28) {
    std::vector<std::vector<std::int64_t>> offsets(static_cast<std::size_t>(d),
                                                   std::vector<std::int64_t>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) offsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q + j - i;
    const RationalSeries det = toeplitz_bessel_det(offsets, order);
    double value = 0.0;
    for (std::int64_t k = det.order(); k >= 0; --k) value = value * x + det.coeff(k).get_d();
    return value;
}

}  // namespace

ComplexMatrix sample_ginibre(int m, RngStream& rng) {
    if (m < 1) throw std::invalid_argument("sample_ginibre: m must be positive");
    ComplexMatrix g(m, m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < m; ++i) g(i, j) = rng.gaussian_complex();
    return g;
}

ComplexMatrix sample_haar_unitary(int m, RngStream& rng) {
    if (m < 1) throw std::invalid_argument("sample_haar_unitary: m must be positive");
    return stiefel_frame(m, m, rng);
}

ComplexMatrix truncate(const ComplexMatrix& u, int d) {
    if (d < 0 || d > u.rows() || d > u.cols())
        throw std::invalid_argument("truncate: block size exceeds matrix dimension");
    return u.topLeftCorner(d, d);
}

ComplexMatrix sample_truncated_unitary(int d, std::int64_t q, RngStream& rng) {
    if (d < 1 || q < 0) throw std::invalid_argument("sample_truncated_unitary: need d >= 1, q >= 0");
    const int m = d + static_cast<int>(q);
    return stiefel_frame(m, d, rng).topRows(d);
}

mpq_class exact_trace_moment(int d, std::int64_t q, std::int64_t n) {
    if (d < 1 || q < 0 || n < 0)
        throw std::invalid_argument("exact_trace_moment: need d >= 1, q >= 0, n >= 0");
    const std::int64_t steps = 2 * n + d * q;
    const mpz_class numerator =
        hook_product(d, q).value * factorial(n) * factorial(n) * z_ground(d, steps, q);
    mpq_class result(numerator, factorial(steps));
    result.canonicalize();
    return result;
}

MomentEstimate mc_trace_moment(int d, std::int64_t q, std::int64_t n, std::int64_t samples,
                               std::uint64_t seed, int workers, std::uint64_t stream_base) {
    return mc::estimate(samples, seed, stream_base, workers, false, [d, q, n](RngStream& rng) {
        const ComplexMatrix p = sample_truncated_unitary(d, q, rng);
        return std::complex<double>{ipow(std::norm(p.trace()), n), 0.0};
    });
}

MomentEstimate mc_unitary_side(int d, std::int64_t q, double x, std::int64_t samples,
                               std::uint64_t seed, int workers, std::uint64_t stream_base) {
    return mc::estimate(samples, seed, stream_base, workers, true, [d, q, x](RngStream& rng) {
        const ComplexMatrix u = sample_haar_unitary(d, rng);
        const double exponent = 2.0 * x * u.trace().real();
        return std::exp(exponent) * cpow(std::conj(u.determinant()), q);
    });
}

MomentEstimate mc_truncation_side(int d, std::int64_t q, double x, std::int64_t samples,
                                  std::uint64_t seed, int workers, std::uint64_t stream_base) {
    MomentEstimate est = mc::estimate(samples, seed, stream_base, workers, false,
                                      [d, q, x](RngStream& rng) {
                                          const ComplexMatrix p = sample_truncated_unitary(d, q, rng);
                                          const double exponent = 2.0 * x * p.trace().real();
                                          return std::complex<double>{std::exp(exponent), 0.0};
                                      });
    const double prefactor = ipow(x, static_cast<std::int64_t>(d) * q) /
                             mpz_to_double(hook_product(d, q).value);
    return scale_estimate(est, prefactor);
}

std::complex<double> sz_kernel(int d, std::int64_t q, std::complex<double> z,
                               std::complex<double> w) {
    if (d < 1 || q < 1) throw std::invalid_argument("sz_kernel: need d >= 1, q >= 1");
    const double zz = std::norm(z);
    const double ww = std::norm(w);
    if (zz > 1.0 + 1e-12 || ww > 1.0 + 1e-12)
        throw std::invalid_argument("sz_kernel: arguments must lie in the closed unit disc");
    const double half = 0.5 * (static_cast<double>(q) - 1.0);
    const double base = (static_cast<double>(q) / kPi) *
                        std::pow(std::max(0.0, 1.0 - zz), half) *
                        std::pow(std::max(0.0, 1.0 - ww), half);
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> zw{1.0, 0.0};  // z^j conj(w)^j
    for (int j = 0; j < d; ++j) {
        sum += binomial(q + j, j).get_d() * zw;
        zw *= z * std::conj(w);
    }
    return base * sum;
}

std::complex<double> ginibre_kernel(int d, std::complex<double> z, std::complex<double> w) {
    if (d < 1) throw std::invalid_argument("ginibre_kernel: need d >= 1");
    const double pref = std::exp(-(std::norm(z) + std::norm(w))) / kPi;
    std::complex<double> sum{0.0, 0.0};
    std::complex<double> zw{1.0, 0.0};
    double jfact = 1.0;
    for (int j = 0; j < d; ++j) {
        sum += zw / jfact;
        zw *= z * std::conj(w);
        jfact *= static_cast<double>(j + 1);
    }
    return pref * sum;
}

double sz_disc_integral(int d, std::int64_t q, int intervals) {
    if (intervals < 2 || intervals % 2 != 0)
        throw std::invalid_argument("sz_disc_integral: intervals must be even and >= 2");
    const double h = 1.0 / intervals;
    auto f = [d, q](double r) {
        return 2.0 * kPi * r * sz_kernel(d, q, {r, 0.0}, {r, 0.0}).real();
    };
    double sum = f(0.0) + f(1.0);
    for (int k = 1; k < intervals; ++k) sum += (k % 2 == 1 ? 4.0 : 2.0) * f(k * h);
    return sum * h / 3.0;
}

KernelConvergenceReport kernel_convergence_report(int d, const std::vector<std::int64_t>& q_values,
                                                  double grid_radius, int grid_per_axis) {
    if (q_values.empty() || !std::is_sorted(q_values.begin(), q_values.end()))
        throw std::invalid_argument("kernel_convergence_report: q values must be ascending");
    if (grid_per_axis < 2) throw std::invalid_argument("kernel_convergence_report: grid too small");

    std::vector<std::complex<double>> grid;
    for (int iy = 0; iy < grid_per_axis; ++iy) {
        for (int ix = 0; ix < grid_per_axis; ++ix) {
            const double x = -grid_radius + 2.0 * grid_radius * ix / (grid_per_axis - 1);
            const double y = -grid_radius + 2.0 * grid_radius * iy / (grid_per_axis - 1);
            if (x * x + y * y <= grid_radius * grid_radius + 1e-12) grid.emplace_back(x, y);
        }
    }

    KernelConvergenceReport report;
    report.d = d;
    report.grid_radius = grid_radius;
    report.grid_per_axis = grid_per_axis;
    report.origin_exact = true;
    report.disc_integrals_ok = true;

    for (const std::int64_t q : q_values) {
        const double sqrtq = std::sqrt(static_cast<double>(q));
        double sup = 0.0;
        for (const auto& z : grid) {
            if (std::abs(z) > sqrtq) continue;  // outside the kernel's disc
            for (const auto& w : grid) {
                if (std::abs(w) > sqrtq) continue;
                const std::complex<double> rescaled =
                    sz_kernel(d, q, z / sqrtq, w / sqrtq) / static_cast<double>(q);
                sup = std::max(sup, std::abs(rescaled - ginibre_kernel(d, z, w)));
            }
        }
        KernelConvergenceRow row;
        row.q = q;
        row.sup_error = sup;
        row.disc_integral = sz_disc_integral(d, q);
        report.rows.push_back(row);

        const std::complex<double> origin =
            sz_kernel(d, q, {0.0, 0.0}, {0.0, 0.0}) / static_cast<double>(q);
        if (origin != ginibre_kernel(d, {0.0, 0.0}, {0.0, 0.0})) report.origin_exact = false;
        if (std::abs(row.disc_integral - d) > 1e-3) report.disc_integrals_ok = false;
    }

    report.sup_decreasing = true;
    for (std::size_t k = 1; k < report.rows.size(); ++k)
        if (!(report.rows[k].sup_error < report.rows[k - 1].sup_error)) report.sup_decreasing = false;
    report.pass = report.sup_decreasing && report.origin_exact && report.disc_integrals_ok;
    return report;
}

double neretin_density(int d, std::int64_t q, const ComplexMatrix& p) {
    if (q < d) throw std::invalid_argument("neretin_density: requires q >= d");
    if (p.rows() != d || p.cols() != d)
        throw std::invalid_argument("neretin_density: matrix must be d x d");
    mpq_class hooks(hook_product(d, q).value, hook_product(d, q - d).value);
    hooks.canonicalize();
    const double constant = hooks.get_d() / ipow(kPi, static_cast<std::int64_t>(d) * d);
    const ComplexMatrix gram = ComplexMatrix::Identity(d, d) - p.adjoint() * p;
    const double det = std::max(0.0, gram.determinant().real());
    return constant * ipow(det, q - d);
}

SchurValue schur_eval(const YoungDiagram& y, std::vector<std::complex<double>> eigenvalues) {
    const int d = static_cast<int>(eigenvalues.size());
    if (d < 1) throw std::invalid_argument("schur_eval: need at least one eigenvalue");
    if (y.row_count() > d)
        throw std::invalid_argument("schur_eval: diagram has more rows than eigenvalues");

    bool coincident = false;
    for (int i = 0; i < d && !coincident; ++i)
        for (int j = i + 1; j < d; ++j)
            if (std::abs(eigenvalues[static_cast<std::size_t>(i)] -
                         eigenvalues[static_cast<std::size_t>(j)]) < 1e-11) {
                coincident = true;
                break;
            }
    if (coincident) {
        // Deterministic phase jitter, at most 1e-9 per entry, splits the
        // coincident pair while staying inside the formula's continuity.
        for (int i = 0; i < d; ++i)
            eigenvalues[static_cast<std::size_t>(i)] *=
                std::exp(std::complex<double>{0.0, 1e-10 * (i + 1)});
    }

    ComplexMatrix numer(d, d);
    ComplexMatrix denom(d, d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const std::int64_t part = j < y.row_count() ? y.row(j) : 0;
            numer(i, j) = cpow(eigenvalues[static_cast<std::size_t>(i)], part + d - 1 - j);
            denom(i, j) = cpow(eigenvalues[static_cast<std::size_t>(i)], d - 1 - j);
        }
    }
    const std::complex<double> dn = denom.determinant();
    SchurValue result;
    result.near_degenerate = std::abs(dn) < 1e-12;
    result.value = numer.determinant() / dn;
    return result;
}

MomentEstimate hall_product_mc(const YoungDiagram& lambda, const YoungDiagram& mu, int d,
                               std::int64_t samples, std::uint64_t seed, int workers,
                               std::uint64_t stream_base) {
    if (lambda.row_count() > d || mu.row_count() > d)
        throw std::invalid_argument("hall_product_mc: diagrams must have at most d rows");
    return mc::estimate(samples, seed, stream_base, workers, true,
                        [&lambda, &mu, d](RngStream& rng) {
                            const ComplexMatrix u = sample_haar_unitary(d, rng);
                            Eigen::ComplexEigenSolver<ComplexMatrix> solver(u, false);
                            std::vector<std::complex<double>> spec(static_cast<std::size_t>(d));
                            std::vector<std::complex<double>> conj_spec(static_cast<std::size_t>(d));
                            for (int i = 0; i < d; ++i) {
                                spec[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
                                conj_spec[static_cast<std::size_t>(i)] =
                                    std::conj(solver.eigenvalues()(i));
                            }
                            return schur_eval(lambda, spec).value * schur_eval(mu, conj_spec).value;
                        });
}

HallProductReport hall_product_report(const YoungDiagram& lambda, const YoungDiagram& mu, int d,
                                      std::int64_t samples, std::uint64_t seed, int workers) {
    HallProductReport report;
    report.d = d;
    report.lambda = lambda;
    report.mu = mu;
    report.estimate = hall_product_mc(lambda, mu, d, samples, seed, workers);
    report.expected = lambda == mu ? 1.0 : 0.0;
    report.deviation = std::abs(report.estimate.mean - std::complex<double>{report.expected, 0.0});
    report.pass = report.deviation <= 4.0 * report.estimate.standard_error;
    return report;
}

double asymptotic_rhs(int d, std::int64_t n, std::int64_t q) {
    if (d < 1 || n < 0 || q < 1)
        throw std::invalid_argument("asymptotic_rhs: need d >= 1, n >= 0, q >= 1");
    return std::exp(log_asymptotic_rhs(d, n, q));
}

MomentIdentityReport moment_identity_report(int d, std::int64_t q, std::int64_t n,
                                            std::int64_t samples, std::uint64_t seed,
                                            int workers) {
    MomentIdentityReport report;
    report.d = d;
    report.q = q;
    report.n = n;
    report.exact = exact_trace_moment(d, q, n);
    report.exact_value = report.exact.get_d();
    report.estimate = mc_trace_moment(d, q, n, samples, seed, workers);
    report.deviation = std::abs(report.estimate.mean.real() - report.exact_value);
    report.tolerance = 4.0 * report.estimate.standard_error;
    report.pass = report.deviation <= report.tolerance;
    return report;
}

WeiWettigReport wei_wettig_report(int d, std::int64_t q, double x, std::int64_t samples,
                                  std::uint64_t seed, int workers) {
    WeiWettigReport report;
    report.d = d;
    report.q = q;
    report.x = x;
    report.unitary_side = mc_unitary_side(d, q, x, samples, seed, workers);
    report.truncation_side =
        mc_truncation_side(d, q, x, samples, seed, workers, /*stream_base=*/1u << 20);
    report.series_value = series_reference_value(d, q, x);
    report.difference =
        std::abs(report.unitary_side.mean.real() - report.truncation_side.mean.real());
    report.combined_se = std::hypot(report.unitary_side.standard_error,
                                    report.truncation_side.standard_error);
    report.sides_agree = report.difference <= 4.0 * report.combined_se;
    report.imag_ok = std::abs(report.unitary_side.mean.imag()) <=
                     4.0 * report.unitary_side.standard_error;
    report.pass = report.sides_agree && report.imag_ok;
    return report;
}

GaussianLimitReport gaussian_limit_report(int d, std::int64_t n,
                                          const std::vector<std::int64_t>& q_values,
                                          std::int64_t samples, std::uint64_t seed, int workers) {
    if (q_values.empty() || !std::is_sorted(q_values.begin(), q_values.end()))
        throw std::invalid_argument("gaussian_limit_report: q values must be ascending");
    GaussianLimitReport report;
    report.d = d;
    report.n = n;
    report.target = ipow(static_cast<double>(d), n) * factorial(n).get_d();
    for (std::size_t k = 0; k < q_values.size(); ++k) {
        const std::int64_t q = q_values[k];
        // Each q gets its own substream block so the rows are independent.
        const MomentEstimate est = mc_trace_moment(d, q, n, samples, seed, workers,
                                                   static_cast<std::uint64_t>(k) << 20);
        const double scale = ipow(static_cast<double>(q), n);
        GaussianLimitRow row;
        row.q = q;
        row.scaled_mean = scale * est.mean.real();
        row.scaled_se = scale * est.standard_error;
        row.deviation = std::abs(row.scaled_mean - report.target);
        report.rows.push_back(row);
    }
    report.shrinking = report.rows.back().deviation < report.rows.front().deviation ||
                       report.rows.back().deviation == 0.0;
    return report;
}

DensityCheckReport density_radial_check(std::int64_t q, std::int64_t samples, std::uint64_t seed,
                                        int workers, double tolerance) {
    if (q < 1) throw std::invalid_argument("density_radial_check: need q >= 1");
    if (samples < 2) throw std::invalid_argument("density_radial_check: need samples >= 2");

    // Empirical side: radii of scalar truncations, strand for strand as in
    // the moment estimators, so worker count never changes the sample set.
    const int strands = mc::strand_count_for(samples);
    std::vector<double> radii(static_cast<std::size_t>(samples));
    auto fill_strand = [&](int s) {
        RngStream rng(seed, static_cast<std::uint64_t>(s));
        const std::int64_t begin = static_cast<std::int64_t>(s) * mc::kStrandSize;
        const std::int64_t end = std::min(begin + mc::kStrandSize, samples);
        for (std::int64_t i = begin; i < end; ++i)
            radii[static_cast<std::size_t>(i)] =
                std::abs(sample_truncated_unitary(1, q, rng)(0, 0));
    };
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
        for (int s = 0; s < strands; ++s) fill_strand(s);
    } else {
        for (int s = 0; s < strands; ++s) fill_strand(s);
    }
    std::sort(radii.begin(), radii.end());

    // Quadrature side: cumulative integral of the radial density
    // 2 pi r * density(r); the closed-form CDF is deliberately not used.
    const int grid = 1 << 16;
    const double h = 1.0 / grid;
    std::vector<double> cdf(static_cast<std::size_t>(grid) + 1, 0.0);
    ComplexMatrix point(1, 1);
    point(0, 0) = {0.0, 0.0};
    double prev = 2.0 * kPi * 0.0 * neretin_density(1, q, point);
    for (int k = 1; k <= grid; ++k) {
        const double r = k * h;
        point(0, 0) = {r, 0.0};
        const double cur = 2.0 * kPi * r * neretin_density(1, q, point);
        cdf[static_cast<std::size_t>(k)] = cdf[static_cast<std::size_t>(k) - 1] +
                                           0.5 * h * (prev + cur);
        prev = cur;
    }
    auto cdf_at = [&](double r) {
        const double t = std::clamp(r, 0.0, 1.0) * grid;
        const int k = std::min(static_cast<int>(t), grid - 1);
        const double frac = t - k;
        const double v = cdf[static_cast<std::size_t>(k)] +
                         frac * (cdf[static_cast<std::size_t>(k) + 1] -
                                 cdf[static_cast<std::size_t>(k)]);
        return std::clamp(v, 0.0, 1.0);
    };

    double ks = 0.0;
    const double dn = static_cast<double>(samples);
    for (std::int64_t i = 0; i < samples; ++i) {
        const double f = cdf_at(radii[static_cast<std::size_t>(i)]);
        ks = std::max(ks, std::max(f - static_cast<double>(i) / dn,
                                   static_cast<double>(i + 1) / dn - f));
    }

    DensityCheckReport report;
    report.q = q;
    report.samples = samples;
    report.seed = seed;
    report.ks_distance = ks;
    report.total_mass = cdf.back();
    report.tolerance = tolerance;
    report.pass = ks < tolerance;
    return report;
}

AsymptoticReport asymptotic_ratio_report(int d, const std::vector<std::int64_t>& n_values,
                                         std::int64_t q, double rel_tolerance) {
    if (d < 1 || q < 1)
        throw std::invalid_argument("asymptotic_ratio_report: need d >= 1, q >= 1");
    AsymptoticReport report;
    report.d = d;
    report.q = q;
    report.rel_tolerance = rel_tolerance;
    report.pass = true;
    for (const std::int64_t n : n_values) {
        const mpz_class exact = z_ground(d, 2 * n + d * q, q);
        if (exact == 0) throw std::invalid_argument("asymptotic_ratio_report: vanishing count");
        AsymptoticRow row;
        row.n = n;
        row.exact = exact.get_str();
        const double log_rhs = log_asymptotic_rhs(d, n, q);
        row.rhs = std::exp(log_rhs);
        row.raw_ratio = std::exp(mpz_log(exact) - log_rhs);
        row.adjusted_ratio = row.raw_ratio * factorial(n).get_d();
        row.adjusted_within = std::abs(row.adjusted_ratio - 1.0) <= rel_tolerance;
        report.pass = report.pass && row.adjusted_within;
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace turnwalk

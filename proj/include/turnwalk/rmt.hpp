#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <gmpxx.h>

#include "turnwalk/lattice.hpp"
#include "turnwalk/mc.hpp"
#include "turnwalk/rng.hpp"

namespace turnwalk {

using ComplexMatrix = Eigen::MatrixXcd;

/// m x m matrix of i.i.d. standard complex Gaussians, filled column-major.
ComplexMatrix sample_ginibre(int m, RngStream& rng);

/// Haar-distributed unitary: QR of a Ginibre matrix with the triangular
/// factor's diagonal phases divided out.  Without the phase correction the
/// law is not Haar, so the correction is not optional.
ComplexMatrix sample_haar_unitary(int m, RngStream& rng);

/// Top-left d x d block; rejects d larger than the matrix.
ComplexMatrix truncate(const ComplexMatrix& u, int d);

/// The d x d principal block of a Haar unitary of size d+q, sampled without
/// forming the full unitary: the block depends only on the first d columns,
/// which are the phase-fixed thin QR of a (d+q) x d Ginibre matrix.  Agrees
/// with truncate(sample_haar_unitary(d+q, rng), d) draw for draw.
ComplexMatrix sample_truncated_unitary(int d, std::int64_t q, RngStream& rng);

/// Exact mixed moment of the truncated trace,
///   E |Tr P|^(2n) = H(d,q) n! n! z_ground(d, 2n+dq, q) / (2n+dq)!.
mpq_class exact_trace_moment(int d, std::int64_t q, std::int64_t n);

/// Monte Carlo mean of |Tr P|^(2n) over d x d truncations of Haar unitaries
/// of size d+q.
MomentEstimate mc_trace_moment(int d, std::int64_t q, std::int64_t n, std::int64_t samples,
                               std::uint64_t seed, int workers = 1,
                               std::uint64_t stream_base = 0);

/// Monte Carlo mean of exp(x Tr(U+U*)) det(U*)^q over Haar U in U(d); the
/// mean is complex, with expected value the generating function value
/// G_d(x;q), so the imaginary part is an internal consistency statistic.
MomentEstimate mc_unitary_side(int d, std::int64_t q, double x, std::int64_t samples,
                               std::uint64_t seed, int workers = 1,
                               std::uint64_t stream_base = 0);

/// (x^(dq)/H(d,q)) times the Monte Carlo mean of exp(x Tr(P+P*)) over
/// truncations; the prefactor scales both mean and standard error, so x = 0
/// with dq > 0 returns exactly zero.
MomentEstimate mc_truncation_side(int d, std::int64_t q, double x, std::int64_t samples,
                                  std::uint64_t seed, int workers = 1,
                                  std::uint64_t stream_base = 0);

/// Correlation kernel of the truncated-unitary spectrum on the unit disc:
///   (q/pi)(1-|z|^2)^((q-1)/2) (1-|w|^2)^((q-1)/2) sum_{j<d} C(q+j,j) z^j conj(w)^j.
std::complex<double> sz_kernel(int d, std::int64_t q, std::complex<double> z,
                               std::complex<double> w);

/// Gaussian-entry limit kernel:
///   (1/pi) exp(-(|z|^2+|w|^2)) sum_{j<d} z^j conj(w)^j / j!.
std::complex<double> ginibre_kernel(int d, std::complex<double> z, std::complex<double> w);

/// Composite-Simpson integral of the kernel diagonal over the unit disc;
/// equals the expected point count d for every q.
double sz_disc_integral(int d, std::int64_t q, int intervals = 1 << 15);

struct KernelConvergenceRow {
    std::int64_t q = 0;
    double sup_error = 0.0;      // sup over grid pairs of the rescaled-kernel gap
    double disc_integral = 0.0;  // quadrature of the kernel diagonal, target d
};

struct KernelConvergenceReport {
    int d = 0;
    double grid_radius = 0.0;
    int grid_per_axis = 0;
    std::vector<KernelConvergenceRow> rows;
    bool origin_exact = false;       // rescaled kernel equals 1/pi exactly at 0
    bool sup_decreasing = false;     // strictly, along the q list
    bool disc_integrals_ok = false;  // each within 1e-3 of d
    bool pass = false;
};

/// Compares q^{-1} sz_kernel(z/sqrt(q), w/sqrt(q)) against the limit kernel
/// on a square grid of points with |z| <= grid_radius (points outside the
/// kernel's domain |z| <= sqrt(q) are skipped).  q values must be ascending.
KernelConvergenceReport kernel_convergence_report(int d, const std::vector<std::int64_t>& q_values,
                                                  double grid_radius = 1.0,
                                                  int grid_per_axis = 7);

/// Lebesgue density of the truncation law on the contraction ball,
///   (H(d,q) / (pi^(d^2) H(d,q-d))) det(I - P*P)^(q-d);  requires q >= d.
double neretin_density(int d, std::int64_t q, const ComplexMatrix& p);

struct SchurValue {
    std::complex<double> value;
    bool near_degenerate = false;  // Vandermonde denominator below 1e-12
};

/// Schur polynomial via the bialternant ratio
/// det(x_i^(lambda_j+d-j)) / det(x_i^(d-j)).  Inputs with a coincident pair
/// are perturbed by a deterministic phase jitter of at most 1e-9 per entry.
SchurValue schur_eval(const YoungDiagram& y, std::vector<std::complex<double>> eigenvalues);

/// Monte Carlo mean of s_lambda(spec U) s_mu(spec U*) over Haar U in U(d);
/// orthogonality makes the expectation 1 if lambda == mu and 0 otherwise.
MomentEstimate hall_product_mc(const YoungDiagram& lambda, const YoungDiagram& mu, int d,
                               std::int64_t samples, std::uint64_t seed, int workers = 1,
                               std::uint64_t stream_base = 0);

struct HallProductReport {
    int d = 0;
    YoungDiagram lambda;
    YoungDiagram mu;
    MomentEstimate estimate;
    double expected = 0.0;
    double deviation = 0.0;
    bool pass = false;
};

HallProductReport hall_product_report(const YoungDiagram& lambda, const YoungDiagram& mu, int d,
                                      std::int64_t samples, std::uint64_t seed, int workers = 1);

/// Right side of the large-separation walk-count asymptotic,
///   (2pi)^((1-d)/2) (prod_{i<d} i!) d^(3n+dq+1/2) q^(n+(1-d^2)/2),
/// evaluated verbatim in the log domain.
double asymptotic_rhs(int d, std::int64_t n, std::int64_t q);

struct MomentIdentityReport {
    int d = 0;
    std::int64_t q = 0;
    std::int64_t n = 0;
    mpq_class exact;
    double exact_value = 0.0;
    MomentEstimate estimate;
    double deviation = 0.0;
    double tolerance = 0.0;  // four standard errors
    bool pass = false;
};

/// Exact trace moment against its Monte Carlo estimate.
MomentIdentityReport moment_identity_report(int d, std::int64_t q, std::int64_t n,
                                            std::int64_t samples, std::uint64_t seed,
                                            int workers = 1);

struct WeiWettigReport {
    int d = 0;
    std::int64_t q = 0;
    double x = 0.0;
    MomentEstimate unitary_side;
    MomentEstimate truncation_side;
    double series_value = 0.0;  // G_d(x;q) from the exact series, for reference
    double difference = 0.0;
    double combined_se = 0.0;
    bool sides_agree = false;  // within four combined standard errors
    bool imag_ok = false;      // unitary-side imaginary part within four SE
    bool pass = false;
};

/// Two independent Monte Carlo routes to G_d(x;q): the unitary-group
/// integral and the truncation-ensemble integral.
WeiWettigReport wei_wettig_report(int d, std::int64_t q, double x, std::int64_t samples,
                                  std::uint64_t seed, int workers = 1);

struct GaussianLimitRow {
    std::int64_t q = 0;
    double scaled_mean = 0.0;  // q^n times the estimated moment
    double scaled_se = 0.0;
    double deviation = 0.0;  // |scaled_mean - d^n n!|
};

struct GaussianLimitReport {
    int d = 0;
    std::int64_t n = 0;
    double target = 0.0;  // d^n n!
    std::vector<GaussianLimitRow> rows;
    bool shrinking = false;  // deviation at the last q below the first
};

/// Rescaled trace moments q^n E|Tr P|^(2n) against the Gaussian limit d^n n!
/// along an ascending q list.
GaussianLimitReport gaussian_limit_report(int d, std::int64_t n,
                                          const std::vector<std::int64_t>& q_values,
                                          std::int64_t samples, std::uint64_t seed,
                                          int workers = 1);

struct DensityCheckReport {
    std::int64_t q = 0;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    double ks_distance = 0.0;
    double total_mass = 0.0;  // quadrature of the density over the disc
    double tolerance = 0.0;
    bool pass = false;
};

/// d = 1 law check: Kolmogorov-Smirnov distance between the empirical radial
/// distribution of truncation samples and the CDF obtained by quadrature of
/// the density (the closed form is never used here).
DensityCheckReport density_radial_check(std::int64_t q, std::int64_t samples, std::uint64_t seed,
                                        int workers = 1, double tolerance = 0.01);

struct AsymptoticRow {
    std::int64_t n = 0;
    std::string exact;           // z_ground(d, 2n+dq, q), decimal
    double rhs = 0.0;            // asymptotic_rhs(d, n, q)
    double raw_ratio = 0.0;      // exact / rhs, formula taken verbatim
    double adjusted_ratio = 0.0; // raw_ratio times n!
    bool adjusted_within = false;
};

struct AsymptoticReport {
    int d = 0;
    std::int64_t q = 0;
    double rel_tolerance = 0.0;
    std::vector<AsymptoticRow> rows;
    bool pass = false;  // every adjusted ratio within rel_tolerance of 1
};

/// Exact ground-state counts against the asymptotic right side.  The raw
/// ratio tracks the formula as printed; the adjusted ratio multiplies by n!,
/// which the d = 1 closed form C(2n+q, n) ~ q^n/n! says is the factor the
/// printed formula is off by.  Both are reported; neither is silently fixed.
AsymptoticReport asymptotic_ratio_report(int d, const std::vector<std::int64_t>& n_values,
                                         std::int64_t q, double rel_tolerance = 0.05);

}  // namespace turnwalk

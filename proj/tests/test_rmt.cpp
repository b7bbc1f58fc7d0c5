#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/SVD>

#include "turnwalk/rmt.hpp"

using namespace turnwalk;

namespace {

constexpr double kPi = std::numbers::pi;

double unitarity_defect(const ComplexMatrix& u) {
    const ComplexMatrix gram = u.adjoint() * u;
    return (gram - ComplexMatrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_SUITE("rmt") {

TEST_CASE("haar samples are unitary") {
    RngStream rng(21, 0);
    for (int m : {1, 2, 5}) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix u = sample_haar_unitary(m, rng);
            CHECK(unitarity_defect(u) < 1e-12);
        }
    }
    CHECK_THROWS_AS(sample_haar_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("a 1x1 haar unitary is a uniform phase") {
    RngStream rng(22, 0);
    bool saw_nonreal = false;
    for (int rep = 0; rep < 20; ++rep) {
        const std::complex<double> u = sample_haar_unitary(1, rng)(0, 0);
        CHECK(std::abs(std::abs(u) - 1.0) < 1e-12);
        saw_nonreal |= std::abs(u.imag()) > 0.1;
    }
    CHECK(saw_nonreal);  // the phase correction must not collapse onto the real axis
}

TEST_CASE("sampling replays per stream") {
    RngStream a(23, 7);
    RngStream b(23, 7);
    const ComplexMatrix ua = sample_haar_unitary(4, a);
    const ComplexMatrix ub = sample_haar_unitary(4, b);
    CHECK((ua - ub).cwiseAbs().maxCoeff() == 0.0);
    const ComplexMatrix ga = sample_ginibre(3, a);
    const ComplexMatrix gb = sample_ginibre(3, b);
    CHECK((ga - gb).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("ginibre entries have unit second moment") {
    RngStream rng(24, 0);
    double sum = 0.0;
    const int reps = 2000;
    for (int rep = 0; rep < reps; ++rep) sum += sample_ginibre(2, rng).squaredNorm();
    CHECK(std::abs(sum / (4.0 * reps) - 1.0) < 0.05);
}

TEST_CASE("truncation takes the principal block") {
    RngStream rng(25, 0);
    const ComplexMatrix u = sample_haar_unitary(3, rng);
    CHECK((truncate(u, 3) - u).cwiseAbs().maxCoeff() == 0.0);
    const ComplexMatrix p = truncate(u, 2);
    CHECK(p.rows() == 2);
    CHECK(p(0, 0) == u(0, 0));
    CHECK(p(1, 0) == u(1, 0));
    CHECK_THROWS_AS(truncate(u, 4), std::invalid_argument);
}

TEST_CASE("truncations are contractions") {
    RngStream rng(26, 0);
    for (int rep = 0; rep < 50; ++rep) {
        const ComplexMatrix p = truncate(sample_haar_unitary(4, rng), 2);
        const Eigen::JacobiSVD<ComplexMatrix> svd(p);
        CHECK(svd.singularValues()(0) <= 1.0 + 1e-12);
    }
}

TEST_CASE("direct truncation sampling matches sample-then-truncate") {
    for (const auto& [d, q] : std::vector<std::pair<int, std::int64_t>>{{2, 1}, {1, 3}, {3, 2}}) {
        RngStream thin_rng(27, 4);
        RngStream full_rng(27, 4);
        const ComplexMatrix thin = sample_truncated_unitary(d, q, thin_rng);
        const ComplexMatrix full =
            truncate(sample_haar_unitary(d + static_cast<int>(q), full_rng), d);
        CHECK((thin - full).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("exact trace moments") {
    CHECK(exact_trace_moment(1, 1, 1) == mpq_class(1, 2));
    CHECK(exact_trace_moment(1, 0, 1) == 1);
    CHECK(exact_trace_moment(2, 0, 1) == 1);
    CHECK(exact_trace_moment(2, 2, 2) == mpq_class(7, 15));
    CHECK(exact_trace_moment(2, 0, 3) == 5);
    CHECK(exact_trace_moment(3, 1, 0) == 1);  // n = 0 normalization
    // scalar truncations: |u_11|^2 is Beta(1, q), so the first moment is 1/(q+1)
    for (std::int64_t q = 0; q <= 10; ++q) {
        mpq_class expected(1, q + 1);
        expected.canonicalize();
        CHECK(exact_trace_moment(1, q, 1) == expected);
    }
    CHECK_THROWS_AS(exact_trace_moment(0, 1, 1), std::invalid_argument);
}

TEST_CASE("monte carlo trace moments meet the exact values") {
    const MomentEstimate trivial = mc_trace_moment(2, 1, 0, 1000, 31);
    CHECK(trivial.mean.real() == 1.0);
    CHECK(trivial.standard_error == 0.0);

    const MomentIdentityReport r = moment_identity_report(1, 1, 1, 60000, 1729);
    CHECK(r.exact == mpq_class(1, 2));
    CHECK(r.pass);
    CHECK(r.tolerance < 0.01);
}

TEST_CASE("estimates are worker-count independent") {
    const MomentEstimate serial = mc_trace_moment(2, 1, 1, 3 * 4096 + 17, 37, 1);
    const MomentEstimate parallel = mc_trace_moment(2, 1, 1, 3 * 4096 + 17, 37, 4);
    CHECK(serial.mean.real() == parallel.mean.real());
    CHECK(serial.standard_error == parallel.standard_error);

    const MomentEstimate h1 = hall_product_mc(YoungDiagram({1}), YoungDiagram({1}), 2, 8200, 38, 1);
    const MomentEstimate h3 = hall_product_mc(YoungDiagram({1}), YoungDiagram({1}), 2, 8200, 38, 3);
    CHECK(h1.mean.real() == h3.mean.real());
    CHECK(h1.mean.imag() == h3.mean.imag());
    CHECK(h1.standard_error == h3.standard_error);
}

TEST_CASE("unitary-group side reproduces bessel values") {
    // I_0(1) and I_1(1), from the exact series at x = 1/2
    const MomentEstimate e0 = mc_unitary_side(1, 0, 0.5, 30000, 41);
    CHECK(std::abs(e0.mean.real() - 1.26606587775201) < 4 * e0.standard_error);

    const MomentEstimate e1 = mc_unitary_side(1, 1, 0.5, 30000, 42);
    CHECK(std::abs(e1.mean.real() - 0.565159103992485) < 4 * e1.standard_error);
    CHECK(std::abs(e1.mean.imag()) < 4 * e1.standard_error);

    // x = 0, q >= 1: a pure determinant power averages to zero
    const MomentEstimate ez = mc_unitary_side(2, 1, 0.0, 30000, 43);
    CHECK(std::abs(ez.mean.real()) < 4 * ez.standard_error);
    CHECK(std::abs(ez.mean.imag()) < 4 * ez.standard_error);
}

TEST_CASE("truncation side prefactor pins the trivial zero") {
    const MomentEstimate zero = mc_truncation_side(2, 1, 0.0, 500, 44);
    CHECK(zero.mean.real() == 0.0);
    CHECK(zero.standard_error == 0.0);

    const MomentEstimate e0 = mc_truncation_side(1, 0, 0.5, 30000, 45);
    CHECK(std::abs(e0.mean.real() - 1.26606587775201) < 4 * e0.standard_error);
}

TEST_CASE("both monte carlo routes meet the series value") {
    const WeiWettigReport r = wei_wettig_report(2, 1, 0.3, 40000, 1729);
    CHECK(std::abs(r.series_value - 0.047777227719) < 1e-9);
    CHECK(r.sides_agree);
    CHECK(r.imag_ok);
    CHECK(r.pass);
    CHECK(std::abs(r.unitary_side.mean.real() - r.series_value) <
          6 * r.unitary_side.standard_error);
}

TEST_CASE("kernel spot values") {
    CHECK(sz_kernel(2, 4, {0.0, 0.0}, {0.0, 0.0}).real() == 4.0 / kPi);
    CHECK(sz_kernel(2, 4, {0.0, 0.0}, {0.0, 0.0}).imag() == 0.0);
    // d = 1, q = 1 is the uniform law on the disc
    CHECK(sz_kernel(1, 1, {0.3, 0.2}, {0.3, 0.2}).real() == 1.0 / kPi);
    CHECK(ginibre_kernel(3, {0.0, 0.0}, {0.0, 0.0}).real() == 1.0 / kPi);

    const std::complex<double> z{0.4, -0.1};
    const std::complex<double> w{-0.2, 0.3};
    const std::complex<double> g = ginibre_kernel(1, z, w);
    CHECK(std::abs(g - std::exp(-(std::norm(z) + std::norm(w))) / kPi) == 0.0);

    CHECK_THROWS_AS(sz_kernel(1, 0, {0.0, 0.0}, {0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(sz_kernel(1, 1, {1.5, 0.0}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("kernel diagonal integrates to the point count") {
    CHECK(std::abs(sz_disc_integral(1, 1) - 1.0) < 1e-6);  // constant integrand
    CHECK(std::abs(sz_disc_integral(2, 3) - 2.0) < 1e-3);
    CHECK(std::abs(sz_disc_integral(1, 8) - 1.0) < 1e-3);
    CHECK_THROWS_AS(sz_disc_integral(1, 1, 3), std::invalid_argument);
}

TEST_CASE("rescaled kernel approaches the gaussian-entry limit") {
    const KernelConvergenceReport r = kernel_convergence_report(1, {4, 16}, 1.0, 5);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.origin_exact);
    CHECK(r.rows[1].sup_error < r.rows[0].sup_error);
    CHECK(r.disc_integrals_ok);
    CHECK(r.pass);
    CHECK_THROWS_AS(kernel_convergence_report(1, {16, 4}), std::invalid_argument);
}

TEST_CASE("truncation-law density values") {
    ComplexMatrix p1(1, 1);
    p1(0, 0) = {0.3, 0.2};
    CHECK(neretin_density(1, 1, p1) == doctest::Approx(1.0 / kPi).epsilon(1e-12));

    ComplexMatrix zero1 = ComplexMatrix::Zero(1, 1);
    CHECK(neretin_density(1, 3, zero1) == doctest::Approx(3.0 / kPi).epsilon(1e-12));

    ComplexMatrix zero2 = ComplexMatrix::Zero(2, 2);
    CHECK(neretin_density(2, 2, zero2) == doctest::Approx(12.0 / std::pow(kPi, 4)).epsilon(1e-12));

    CHECK_THROWS_AS(neretin_density(2, 1, zero2), std::invalid_argument);
    CHECK_THROWS_AS(neretin_density(2, 3, zero1), std::invalid_argument);
}

TEST_CASE("empirical radial law matches the density") {
    const DensityCheckReport r = density_radial_check(1, 20000, 1729, 1, 0.02);
    CHECK(std::abs(r.total_mass - 1.0) < 1e-6);
    CHECK(r.ks_distance < 0.02);
    CHECK(r.pass);

    const DensityCheckReport r3 = density_radial_check(3, 20000, 1729, 2, 0.02);
    CHECK(r3.pass);
    CHECK_THROWS_AS(density_radial_check(0, 1000, 1), std::invalid_argument);
}

TEST_CASE("schur evaluation on explicit spectra") {
    const std::vector<std::complex<double>> xs = {{0.5, 0.1}, {-0.3, 0.7}};
    CHECK(std::abs(schur_eval(YoungDiagram(), xs).value - 1.0) < 1e-14);

    const std::complex<double> sum = xs[0] + xs[1];
    const std::complex<double> prod = xs[0] * xs[1];
    CHECK(std::abs(schur_eval(YoungDiagram({1}), xs).value - sum) < 1e-10);
    CHECK(std::abs(schur_eval(YoungDiagram({1, 1}), xs).value - prod) < 1e-10);
    const std::complex<double> h2 = xs[0] * xs[0] + prod + xs[1] * xs[1];
    CHECK(std::abs(schur_eval(YoungDiagram({2}), xs).value - h2) < 1e-10);

    CHECK_THROWS_AS(schur_eval(YoungDiagram({1, 1, 1}), xs), std::invalid_argument);
}

TEST_CASE("coincident spectra are jittered, crowded ones are flagged") {
    const SchurValue jittered =
        schur_eval(YoungDiagram({1}), {{1.0, 0.0}, {1.0, 0.0}});
    CHECK(std::abs(jittered.value - std::complex<double>{2.0, 0.0}) < 1e-6);
    CHECK_FALSE(jittered.near_degenerate);

    std::vector<std::complex<double>> crowded;
    for (int k = 0; k < 5; ++k) crowded.push_back({1.0 + 1e-4 * k, 0.0});
    CHECK(schur_eval(YoungDiagram({1}), crowded).near_degenerate);
}

TEST_CASE("schur orthogonality under the haar average") {
    const MomentEstimate unit = hall_product_mc(YoungDiagram(), YoungDiagram(), 2, 500, 51);
    CHECK(unit.mean.real() == 1.0);
    CHECK(unit.standard_error == 0.0);

    const HallProductReport same =
        hall_product_report(YoungDiagram({1}), YoungDiagram({1}), 2, 20000, 52);
    CHECK(same.expected == 1.0);
    CHECK(same.pass);

    const HallProductReport cross =
        hall_product_report(YoungDiagram({2}), YoungDiagram({1, 1}), 2, 20000, 53);
    CHECK(cross.expected == 0.0);
    CHECK(cross.pass);

    CHECK_THROWS_AS(hall_product_mc(YoungDiagram({1, 1, 1}), YoungDiagram(), 2, 500, 1),
                    std::invalid_argument);
}

TEST_CASE("asymptotic right side evaluates in the log domain") {
    CHECK(asymptotic_rhs(1, 0, 5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(asymptotic_rhs(1, 1, 100) == doctest::Approx(100.0).epsilon(1e-9));
    CHECK(asymptotic_rhs(2, 0, 2) == doctest::Approx(3.191538).epsilon(1e-5));
    CHECK(std::isfinite(asymptotic_rhs(1, 12, 2000)));
    CHECK_THROWS_AS(asymptotic_rhs(1, 0, 0), std::invalid_argument);
}

TEST_CASE("moments sharpen toward the gaussian limit") {
    const GaussianLimitReport r = gaussian_limit_report(1, 1, {4, 16}, 10000, 1729);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.target == 1.0);
    CHECK(r.rows[0].scaled_se > 0.0);
    CHECK(r.shrinking);

    const GaussianLimitReport trivial = gaussian_limit_report(2, 0, {2, 8}, 500, 1729);
    CHECK(trivial.rows[0].scaled_mean == 1.0);
    CHECK(trivial.rows[1].deviation == 0.0);
    CHECK(trivial.shrinking);
    CHECK_THROWS_AS(gaussian_limit_report(1, 1, {8, 2}, 500, 1), std::invalid_argument);
}

TEST_CASE("exact counts track the printed asymptotic form up to n factorial") {
    const AsymptoticReport r = asymptotic_ratio_report(1, {0, 1, 2, 3}, 200);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.rows[0].raw_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.rows[0].adjusted_ratio == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(r.rows[1].exact == "202");
    CHECK(r.rows[1].adjusted_ratio == doctest::Approx(1.01).epsilon(1e-9));
    CHECK(r.rows[1].adjusted_within);
    CHECK(r.rows[3].adjusted_ratio == doctest::Approx(1.076865).epsilon(1e-5));
    CHECK_FALSE(r.rows[3].adjusted_within);  // the printed formula drifts by n! and then some
    CHECK_FALSE(r.pass);
    // the raw ratio is nowhere near 1 once n > 0: the 1/n! gap
    CHECK(r.rows[2].raw_ratio == doctest::Approx(0.5 * 1.035325).epsilon(1e-4));
    CHECK_THROWS_AS(asymptotic_ratio_report(1, {0}, 0), std::invalid_argument);
}

}  // TEST_SUITE

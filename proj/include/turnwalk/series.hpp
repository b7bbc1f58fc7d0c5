#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "turnwalk/lattice.hpp"

namespace turnwalk {

/// Truncated power series with exact rational coefficients.  The truncation
/// order is inclusive and explicit; arithmetic truncates to the smaller of
/// the operand orders.
class RationalSeries {
public:
    explicit RationalSeries(std::int64_t order);

    std::int64_t order() const { return order_; }
    const mpq_class& coeff(std::int64_t k) const;
    void set_coeff(std::int64_t k, const mpq_class& value);

    RationalSeries operator+(const RationalSeries& rhs) const;
    RationalSeries operator-(const RationalSeries& rhs) const;
    RationalSeries operator*(const RationalSeries& rhs) const;
    RationalSeries operator-() const;
    RationalSeries scaled(const mpq_class& factor) const;

    bool operator==(const RationalSeries&) const = default;

private:
    std::int64_t order_ = 0;
    std::vector<mpq_class> coeffs_;  // index 0..order_
};

/// Modified Bessel series I_k(2x) = sum_n x^(2n+|k|) / (n! (n+|k|)!),
/// truncated at `order`.  Negative orders fold onto |k|.
RationalSeries bessel_series(std::int64_t k, std::int64_t order);

/// Determinant of (I_offsets[i][j](2x)) expanded with exact series
/// arithmetic.  Intended for small matrices; the Leibniz expansion is used.
RationalSeries toeplitz_bessel_det(const std::vector<std::vector<std::int64_t>>& offsets,
                                   std::int64_t order);

struct HookProduct {
    int d = 0;
    std::int64_t q = 0;
    mpz_class value;
};

/// Hook product of the d x q rectangle: prod_{i=0}^{d-1} (q+i)!/i!.
HookProduct hook_product(int d, std::int64_t q);

/// Exponential generating series of the ground-state walk counts, built from
/// the enumeration side: sum_N z_ground(d,N,q) x^N / N!.
RationalSeries gd_from_counts(int d, std::int64_t q, std::int64_t order);

/// One coefficient comparison row; exact integers/rationals as decimal
/// strings so reports stay faithful when serialized.
struct CoefficientRow {
    std::int64_t index = 0;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

struct SeriesMatchReport {
    std::string name;
    std::vector<CoefficientRow> rows;
    bool pass = false;
};

/// Walk-count generating series against the Toeplitz-Bessel determinant with
/// offsets q+j-i, coefficient by coefficient, exact.
SeriesMatchReport toeplitz_match_report(int d, std::int64_t q, std::int64_t order);

/// Refined-count series between two configurations against the determinant
/// with offsets lambda_i - mu_j, built twice from distinct word families
/// (L^n R^(n+gap) and (LR)^n R^gap), which must agree count by count.
SeriesMatchReport determinantal_report(int d, const Configuration& mu,
                                       const Configuration& lambda, std::int64_t order);

/// Bounded-LIS permutation series against the determinant with offsets i-j.
SeriesMatchReport gessel_report(int d, std::int64_t order);

}  // namespace turnwalk

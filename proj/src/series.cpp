#include "turnwalk/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turnwalk/enumeration.hpp"
#include "turnwalk/operators.hpp"

namespace turnwalk {

RationalSeries::RationalSeries(std::int64_t order) : order_(order) {
    if (order < 0) throw std::invalid_argument("RationalSeries: order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1, mpq_class(0));
}

const mpq_class& RationalSeries::coeff(std::int64_t k) const {
    if (k < 0 || k > order_) throw std::out_of_range("RationalSeries: coefficient index");
    return coeffs_[static_cast<std::size_t>(k)];
}

void RationalSeries::set_coeff(std::int64_t k, const mpq_class& value) {
    if (k < 0 || k > order_) throw std::out_of_range("RationalSeries: coefficient index");
    mpq_class v = value;
    v.canonicalize();
    coeffs_[static_cast<std::size_t>(k)] = v;
}

RationalSeries RationalSeries::operator+(const RationalSeries& rhs) const {
    RationalSeries out(std::min(order_, rhs.order_));
    for (std::int64_t k = 0; k <= out.order_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] =
            coeffs_[static_cast<std::size_t>(k)] + rhs.coeffs_[static_cast<std::size_t>(k)];
    return out;
}

RationalSeries RationalSeries::operator-(const RationalSeries& rhs) const {
    RationalSeries out(std::min(order_, rhs.order_));
    for (std::int64_t k = 0; k <= out.order_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] =
            coeffs_[static_cast<std::size_t>(k)] - rhs.coeffs_[static_cast<std::size_t>(k)];
    return out;
}

RationalSeries RationalSeries::operator*(const RationalSeries& rhs) const {
    RationalSeries out(std::min(order_, rhs.order_));
    for (std::int64_t i = 0; i <= order_ && i <= out.order_; ++i) {
        const mpq_class& a = coeffs_[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        for (std::int64_t j = 0; i + j <= out.order_ && j <= rhs.order_; ++j) {
            const mpq_class& b = rhs.coeffs_[static_cast<std::size_t>(j)];
            if (b == 0) continue;
            out.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
        }
    }
    return out;
}

RationalSeries RationalSeries::operator-() const {
    RationalSeries out(order_);
    for (std::int64_t k = 0; k <= order_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] = -coeffs_[static_cast<std::size_t>(k)];
    return out;
}

RationalSeries RationalSeries::scaled(const mpq_class& factor) const {
    RationalSeries out(order_);
    for (std::int64_t k = 0; k <= order_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)] * factor;
    return out;
}

RationalSeries bessel_series(std::int64_t k, std::int64_t order) {
    if (order < 0) throw std::invalid_argument("bessel_series: order must be >= 0");
    const std::int64_t a = k < 0 ? -k : k;  // I_{-k} = I_k
    RationalSeries out(order);
    for (std::int64_t n = 0; 2 * n + a <= order; ++n) {
        mpq_class c(mpz_class(1), mpz_class(factorial(n) * factorial(n + a)));
        c.canonicalize();
        out.set_coeff(2 * n + a, c);
    }
    return out;
}

RationalSeries toeplitz_bessel_det(const std::vector<std::vector<std::int64_t>>& offsets,
                                   std::int64_t order) {
    const std::size_t d = offsets.size();
    if (d == 0) throw std::invalid_argument("toeplitz_bessel_det: empty matrix");
    for (const auto& row : offsets)
        if (row.size() != d)
            throw std::invalid_argument("toeplitz_bessel_det: matrix must be square");

    std::vector<std::vector<RationalSeries>> entries;
    entries.reserve(d);
    for (const auto& row : offsets) {
        std::vector<RationalSeries> r;
        r.reserve(d);
        for (auto k : row) r.push_back(bessel_series(k, order));
        entries.push_back(std::move(r));
    }

    // Leibniz expansion; d stays tiny so d! terms are fine.
    std::vector<std::size_t> perm(d);
    std::iota(perm.begin(), perm.end(), 0);
    RationalSeries det(order);
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) inversions += perm[i] > perm[j];
        RationalSeries term = entries[0][perm[0]];
        for (std::size_t i = 1; i < d; ++i) term = term * entries[i][perm[i]];
        det = (inversions % 2 == 0) ? det + term : det - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

HookProduct hook_product(int d, std::int64_t q) {
    if (d < 1 || q < 0) throw std::invalid_argument("hook_product: need d >= 1, q >= 0");
    HookProduct h{d, q, mpz_class(1)};
    for (int i = 0; i < d; ++i) {
        mpz_class term;
        mpz_divexact(term.get_mpz_t(), factorial(q + i).get_mpz_t(), factorial(i).get_mpz_t());
        h.value *= term;
    }
    return h;
}

RationalSeries gd_from_counts(int d, std::int64_t q, std::int64_t order) {
    RationalSeries out(order);
    for (std::int64_t steps = 0; steps <= order; ++steps) {
        mpz_class count = z_ground(d, steps, q);
        if (count == 0) continue;
        mpq_class c(count, factorial(steps));
        c.canonicalize();
        out.set_coeff(steps, c);
    }
    return out;
}

namespace {

std::vector<CoefficientRow> compare_series(const RationalSeries& lhs, const RationalSeries& rhs) {
    std::vector<CoefficientRow> rows;
    const std::int64_t order = std::min(lhs.order(), rhs.order());
    rows.reserve(static_cast<std::size_t>(order) + 1);
    for (std::int64_t k = 0; k <= order; ++k) {
        CoefficientRow row;
        row.index = k;
        row.lhs = lhs.coeff(k).get_str();
        row.rhs = rhs.coeff(k).get_str();
        row.equal = lhs.coeff(k) == rhs.coeff(k);
        rows.push_back(std::move(row));
    }
    return rows;
}

bool all_equal(const std::vector<CoefficientRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.equal; });
}

}  // namespace

SeriesMatchReport toeplitz_match_report(int d, std::int64_t q, std::int64_t order) {
    std::vector<std::vector<std::int64_t>> offsets(static_cast<std::size_t>(d),
                                                   std::vector<std::int64_t>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) offsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q + j - i;

    SeriesMatchReport report;
    report.name = "walk-egf-vs-toeplitz-det";
    report.rows = compare_series(gd_from_counts(d, q, order), toeplitz_bessel_det(offsets, order));
    report.pass = all_equal(report.rows);
    return report;
}

SeriesMatchReport determinantal_report(int d, const Configuration& mu, const Configuration& lambda,
                                       std::int64_t order) {
    if (mu.dim() != d || lambda.dim() != d)
        throw std::invalid_argument("determinantal_report: configuration dimension mismatch");
    const std::int64_t gap = rank_of(lambda) - rank_of(mu);
    if (gap < 0)
        throw std::invalid_argument("determinantal_report: rank(mu) must be <= rank(lambda)");

    WeylGraph graph{d};
    RationalSeries ladder(order);   // counts from L^n R^(n+gap)
    RationalSeries zigzag(order);   // counts from (LR)^n R^gap
    bool families_agree = true;
    for (std::int64_t n = 0; 2 * n + gap <= order; ++n) {
        const StepWord ladder_word =
            StepWord::block(Step::L, n) + StepWord::block(Step::R, n + gap);
        StepWord zigzag_word;
        for (std::int64_t i = 0; i < n; ++i)
            zigzag_word = zigzag_word + StepWord::parse("LR");
        zigzag_word = zigzag_word + StepWord::block(Step::R, gap);

        const mpz_class a = refined_count(graph, ladder_word, mu, lambda);
        const mpz_class b = refined_count(graph, zigzag_word, mu, lambda);
        families_agree = families_agree && a == b;

        mpq_class c(a, mpz_class(factorial(n) * factorial(n + gap)));
        c.canonicalize();
        ladder.set_coeff(2 * n + gap, c);
        mpq_class cz(b, mpz_class(factorial(n) * factorial(n + gap)));
        cz.canonicalize();
        zigzag.set_coeff(2 * n + gap, cz);
    }

    std::vector<std::vector<std::int64_t>> offsets(static_cast<std::size_t>(d),
                                                   std::vector<std::int64_t>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            offsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                lambda.part(i) - mu.part(j);

    SeriesMatchReport report;
    report.name = "refined-series-vs-bessel-det";
    report.rows = compare_series(ladder, toeplitz_bessel_det(offsets, order));
    report.pass = families_agree && ladder == zigzag && all_equal(report.rows);
    return report;
}

SeriesMatchReport gessel_report(int d, std::int64_t order) {
    if (order / 2 > kUCountMaxN)
        throw std::invalid_argument("gessel_report: order/2 exceeds the u_count budget");
    RationalSeries lhs(order);
    for (std::int64_t n = 0; 2 * n <= order; ++n) {
        mpq_class c(u_count(d, static_cast<int>(n)), mpz_class(factorial(n) * factorial(n)));
        c.canonicalize();
        lhs.set_coeff(2 * n, c);
    }
    std::vector<std::vector<std::int64_t>> offsets(static_cast<std::size_t>(d),
                                                   std::vector<std::int64_t>(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) offsets[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i - j;

    SeriesMatchReport report;
    report.name = "bounded-lis-egf-vs-toeplitz-det";
    report.rows = compare_series(lhs, toeplitz_bessel_det(offsets, order));
    report.pass = all_equal(report.rows);
    return report;
}

}  // namespace turnwalk

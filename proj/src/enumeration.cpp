#include "turnwalk/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace turnwalk {

mpz_class binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Pascal recurrence along one row, right to left so entries stay exact.
    std::vector<mpz_class> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i)
        for (std::int64_t j = std::min(i, k); j >= 1; --j)
            row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
    return row[static_cast<std::size_t>(k)];
}

mpz_class factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    static std::mutex mutex;
    static std::vector<mpz_class> cache{mpz_class(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (static_cast<std::int64_t>(cache.size()) <= n)
        cache.push_back(cache.back() * static_cast<unsigned long>(cache.size()));
    return cache[static_cast<std::size_t>(n)];
}

mpz_class z_count(const WalkCountQuery& query) {
    if (query.d < 1) throw std::invalid_argument("z_count: d must be >= 1");
    if (query.steps < 0) throw std::invalid_argument("z_count: steps must be >= 0");
    if (query.from.dim() != query.d || query.to.dim() != query.d)
        throw std::invalid_argument("z_count: configuration dimension mismatch");

    const std::int64_t target_rank = rank_of(query.to);
    // Parity and distance screen before any transfer work.
    const std::int64_t gap = std::abs(target_rank - rank_of(query.from));
    if (gap > query.steps || (query.steps - gap) % 2 != 0) return 0;

    WeylGraph graph{query.d};
    StateVector<Configuration> front = unit_vector(query.from);
    for (std::int64_t t = 0; t < query.steps; ++t) {
        const std::int64_t remaining = query.steps - t - 1;
        StateVector<Configuration> next;
        for (const auto& [vertex, coeff] : front) {
            for (const auto& w : graph.up(vertex))
                if (std::abs(rank_of(w) - target_rank) <= remaining)
                    detail::add_scaled(next, w, coeff);
            for (const auto& w : graph.down(vertex))
                if (std::abs(rank_of(w) - target_rank) <= remaining)
                    detail::add_scaled(next, w, coeff);
        }
        front = std::move(next);
    }
    auto it = front.find(query.to);
    return it == front.end() ? mpz_class(0) : it->second;
}

mpz_class z_ground(const GroundStateQuery& query) {
    if (query.d < 1) throw std::invalid_argument("z_ground: d must be >= 1");
    if (query.steps < 0 || query.separation < 0)
        throw std::invalid_argument("z_ground: steps and separation must be >= 0");
    const std::int64_t excess = query.steps - query.d * query.separation;
    if (excess < 0 || excess % 2 != 0) return 0;
    return z_count({query.d, query.steps, ground_state(query.d),
                    shifted_ground_state(query.d, query.separation)});
}

mpz_class z_ground(int d, std::int64_t steps, std::int64_t separation) {
    return z_ground(GroundStateQuery{d, steps, separation});
}

namespace {

mpz_class oracle_walks(const WeylGraph& g, const Configuration& at, const Configuration& to,
                       std::int64_t left) {
    if (left == 0) return at == to ? 1 : 0;
    mpz_class total = 0;
    for (const auto& w : g.up(at)) total += oracle_walks(g, w, to, left - 1);
    for (const auto& w : g.down(at)) total += oracle_walks(g, w, to, left - 1);
    return total;
}

}  // namespace

mpz_class walk_oracle(const WalkCountQuery& query) {
    if (query.steps > kWalkOracleMaxSteps)
        throw std::invalid_argument("walk_oracle: steps exceed the enumeration bound");
    if (query.steps < 0) throw std::invalid_argument("walk_oracle: steps must be >= 0");
    if (query.from.dim() != query.d || query.to.dim() != query.d)
        throw std::invalid_argument("walk_oracle: configuration dimension mismatch");
    WeylGraph graph{query.d};
    return oracle_walks(graph, query.from, query.to, query.steps);
}

int lis_length(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("lis_length: input is not a permutation of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
    // Patience sorting: pile tops are the smallest possible tails.
    std::vector<int> tops;
    for (int v : perm) {
        auto it = std::lower_bound(tops.begin(), tops.end(), v);
        if (it == tops.end())
            tops.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tops.size());
}

mpz_class u_count(int d, int n) {
    if (d < 1) throw std::invalid_argument("u_count: d must be >= 1");
    if (n < 0) throw std::invalid_argument("u_count: n must be >= 0");
    if (n > kUCountMaxN)
        throw std::invalid_argument("u_count: n exceeds the brute-force bound");
    if (n == 0) return 1;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    mpz_class count = 0;
    do {
        if (lis_length(perm) <= d) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

mpz_class syt_count(const YoungDiagram& y) {
    const std::int64_t n = cell_count(y);
    if (n == 0) return 1;
    mpz_class product = 1;
    for (int i = 0; i < y.row_count(); ++i) {
        for (std::int64_t j = 0; j < y.row(i); ++j) {
            std::int64_t arm = y.row(i) - j - 1;
            std::int64_t leg = 0;
            for (int k = i + 1; k < y.row_count(); ++k) leg += (y.row(k) > j);
            product *= arm + leg + 1;
        }
    }
    mpz_class result;
    mpz_divexact(result.get_mpz_t(), factorial(n).get_mpz_t(), product.get_mpz_t());
    return result;
}

ForresterReport forrester_check(int d, int n) {
    ForresterReport report;
    report.d = d;
    report.steps = 2 * static_cast<std::int64_t>(n);
    report.walk_side = z_ground(d, report.steps, 0);
    report.product_side = binomial(report.steps, n) * u_count(d, n);
    report.even_case_pass = report.walk_side == report.product_side;
    report.odd_case_pass = z_ground(d, report.steps + 1, 0) == 0;
    report.pass = report.even_case_pass && report.odd_case_pass;
    return report;
}

RskChainReport rsk_chain_check(int d, std::int64_t n, std::int64_t q) {
    if (d < 1 || n < 0 || q < 0)
        throw std::invalid_argument("rsk_chain_check: need d >= 1, n >= 0, q >= 0");
    RskChainReport report;
    report.d = d;
    report.n = n;
    report.q = q;

    const std::int64_t steps = 2 * n + d * q;
    BoundedYoungGraph young{d};
    const StepWord word = StepWord::block(Step::L, n) + StepWord::block(Step::R, n + d * q);
    const YoungDiagram target = q == 0 ? YoungDiagram{} : YoungDiagram::rectangle(d, q);
    report.refined = refined_count(young, word, YoungDiagram{}, target);
    report.lhs = report.refined * binomial(steps, n);
    report.rhs = z_ground(d, steps, q);
    report.pass = report.lhs == report.rhs;

    if (q == 0) {
        report.young_closed = report.refined;
        report.u_value = u_count(d, static_cast<int>(n));
        report.pass = report.pass && report.young_closed == report.u_value;
    }
    return report;
}

}  // namespace turnwalk

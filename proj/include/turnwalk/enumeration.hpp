#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "turnwalk/lattice.hpp"
#include "turnwalk/operators.hpp"

namespace turnwalk {

/// Exact binomial coefficient via the Pascal recurrence.
mpz_class binomial(std::int64_t n, std::int64_t k);

/// Exact factorial, cached.
mpz_class factorial(std::int64_t n);

struct WalkCountQuery {
    int d;
    std::int64_t steps;
    Configuration from;
    Configuration to;
};

struct GroundStateQuery {
    int d;
    std::int64_t steps;
    std::int64_t separation;
};

/// Number of `steps`-step walks from `from` to `to` on W_d, by sparse
/// transfer of R+L with rank-reachability pruning.
mpz_class z_count(const WalkCountQuery& query);

/// Ground-state walk count: rho to rho shifted `separation` sites.  Zero
/// unless steps - d*separation is a non-negative even number.
mpz_class z_ground(const GroundStateQuery& query);
mpz_class z_ground(int d, std::int64_t steps, std::int64_t separation);

inline constexpr std::int64_t kWalkOracleMaxSteps = 12;

/// Plain depth-first enumeration of all neighbor sequences; no transfer
/// machinery, no pruning.  Independent check for z_count; steps capped at
/// kWalkOracleMaxSteps.
mpz_class walk_oracle(const WalkCountQuery& query);

/// Longest increasing subsequence length by patience sorting.  The input
/// must be a permutation of 1..n.
int lis_length(const std::vector<int>& perm);

inline constexpr int kUCountMaxN = 9;

/// Number of permutations of S(n) whose longest increasing subsequence has
/// length at most d, by direct enumeration of S(n); n capped at kUCountMaxN.
mpz_class u_count(int d, int n);

/// Standard Young tableaux of the given shape, by the hook length formula.
mpz_class syt_count(const YoungDiagram& y);

struct ForresterReport {
    int d = 0;
    std::int64_t steps = 0;
    mpz_class walk_side;     // z_ground(d, 2n, 0)
    mpz_class product_side;  // C(2n,n) * u_d(n)
    bool even_case_pass = false;
    bool odd_case_pass = false;  // z_ground(d, 2n+1, 0) == 0
    bool pass = false;
};

/// Cross-checks the even/odd ground-state count against the bounded-LIS
/// permutation count, both sides computed independently.
ForresterReport forrester_check(int d, int n);

struct RskChainReport {
    int d = 0;
    std::int64_t n = 0;
    std::int64_t q = 0;
    mpz_class refined;       // walks empty -> d x q on Y_d with signature L^n R^(n+dq)
    mpz_class lhs;           // refined * C(2n+dq, n)
    mpz_class rhs;           // z_ground(d, 2n+dq, q)
    mpz_class young_closed;  // q == 0 only: refined count vs u_d(n)
    mpz_class u_value;       // q == 0 only
    bool pass = false;
};

/// The tableau-walk route to the ground-state count: a refined count on the
/// bounded Young graph times a binomial must reproduce z_ground.
RskChainReport rsk_chain_check(int d, std::int64_t n, std::int64_t q);

}  // namespace turnwalk

#ifndef LRC_CONSTRUCT_HPP
#define LRC_CONSTRUCT_HPP

#include <cstdint>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

// Target layout of the repair groups: group sizes, the locality parameters,
// and optionally a tail of all-zero columns used when n mod (r + delta - 1)
// falls strictly between 0 and delta. partition_lengths emits sizes in
// ascending order; compute_z sorts internally, so caller-made plans may list
// sizes in any order.
struct GroupPlan {
    std::vector<size_t> sizes;
    size_t r = 0;
    size_t delta = 2;
    size_t zero_columns = 0;

    size_t group_count() const { return sizes.size(); }
    size_t covered_length() const;  // sum of sizes, without zero columns
    size_t total_length() const { return covered_length() + zero_columns; }
    std::vector<size_t> free_ranks() const;  // t_j = s_j - delta + 1, in plan order

    // Checks delta <= s_j <= r+delta-1, zero_columns < delta, and the rank
    // feasibility sum(t_j) >= k.
    void validate(size_t k) const;
};

// Group sizes for (n, k, r, delta): full groups of size r+delta-1 plus one
// remainder group of size b when b >= delta; when 0 < b < delta the plan
// covers n-b columns and requests b zero columns instead.
GroupPlan partition_lengths(size_t n, size_t k, size_t r, size_t delta);

// z = the largest prefix of the ascending t_j whose sum still fits in k-1.
struct ZStatistic {
    size_t z = 0;
    std::vector<size_t> prefix_sums;  // prefix_sums[j] = t_1 + ... + t_j
};
ZStatistic compute_z(const GroupPlan& plan, size_t k);

// Guaranteed distance of an accepted construction: n - k - z(delta-1) + 1,
// with n the covered length (zero columns do not contribute).
long distance_bound(size_t n_covered, size_t k, size_t delta, size_t z);

struct ConstructOptions {
    uint64_t seed = 0;
    unsigned max_retries = 32;
    DistanceOptions distance;
    uint64_t selection_budget = 1ull << 22;  // greedy: cap on selections enumerated per check
    unsigned candidate_attempts = 200;       // greedy: draws per generator vector
};

struct ConstructResult {
    LinearCode code;
    LocalityStructure structure;
    ConstructionReport report;
};

// Random construction: per group, a k x t_j block of i.i.d. uniform entries
// followed by its product with a fixed repair block whose square submatrices
// are all invertible. An attempt is accepted when the matrix has rank k,
// every group passes check_group_repairability and the exhaustive minimum
// distance meets distance_bound; otherwise it is resampled.
ConstructResult random_lrc(size_t n, size_t k, const GroupPlan& plan, FieldPtr field,
                           const ConstructOptions& options = {});

// Greedy construction: group generators are drawn one at a time and accepted
// only while the cumulative independent-selection property (over the finished
// groups plus the partial group with its partial repair columns) still holds.
// The final code is verified exactly like random_lrc's.
ConstructResult greedy_lrc(size_t n, size_t k, size_t r, size_t delta, FieldPtr field,
                           const ConstructOptions& options = {});

struct SelectionCheck {
    bool ok = true;
    // On failure, one offending selection as (group, column-within-group) pairs.
    std::vector<std::pair<size_t, size_t>> witness;
};

// True iff every way of taking at most caps[j] columns from groups[j], at
// most k columns in total, yields a linearly independent set. Only maximal
// selections are enumerated (subsets of independent sets are independent).
SelectionCheck independent_selection_property(const std::vector<Matrix>& groups, size_t k,
                                              const std::vector<size_t>& caps,
                                              uint64_t budget = 1ull << 22);

struct MonteCarloRow {
    uint64_t q = 0;
    unsigned trials = 0;
    unsigned successes = 0;
    double rate = 0.0;
    double mean_distance = 0.0;  // over successful trials; 0 when none
    long bound = 0;
    long d_opt = 0;
};

// Single-attempt success rate of the random construction across fields.
// Trial i under field q always uses the same derived seed, so results are
// reproducible and trials may be distributed across workers.
std::vector<MonteCarloRow> monte_carlo(size_t n, size_t k, const GroupPlan& plan,
                                       const std::vector<FieldPtr>& fields, unsigned trials,
                                       uint64_t seed, const ConstructOptions& options = {},
                                       unsigned workers = 1);

}  // namespace lrc

#endif

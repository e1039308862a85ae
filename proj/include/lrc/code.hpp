#ifndef LRC_CODE_HPP
#define LRC_CODE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrc/matrix.hpp"

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;

// A linear [n, k] code given by a full-row-rank generator matrix. Zero
// columns are allowed (a code symbol that always stores 0), but the rank
// requirement is checked at construction.
class LinearCode {
  public:
    explicit LinearCode(Matrix generator);

    const Matrix& generator() const { return generator_; }
    size_t length() const { return generator_.cols(); }
    size_t dimension() const { return generator_.rows(); }
    const FieldPtr& field() const { return generator_.field(); }

  private:
    Matrix generator_;
};

// Partition of the symbol positions into repair groups. Groups must be
// disjoint, cover {0..n-1} and respect |S| <= r + delta - 1. Groups smaller
// than delta are only valid when all their columns are zero (the padded
// codes produced by the constructions carry such a group); that condition
// needs the code and is checked in has_all_symbol_locality.
struct LocalityStructure {
    std::vector<std::vector<size_t>> groups;
    size_t r = 0;
    size_t delta = 2;

    void validate(size_t n) const;
};

struct DistanceOptions {
    uint64_t message_budget = 1ull << 24;  // max q^k before the enumeration refuses to run
    unsigned workers = 1;                  // >1 partitions the message space across threads
    // When nonzero the enumeration may stop as soon as a weight below this
    // value is seen; the result is then only a witness that d < early_exit_at.
    size_t early_exit_at = 0;
};

// Exact minimum Hamming distance by message-space enumeration. One
// representative per scalar ray is enumerated (weights are invariant under
// nonzero scaling), which the all-pairs oracle in the tests cross-checks.
size_t minimum_distance(const LinearCode& code, const DistanceOptions& options = {});

// Singleton-type bound n - k - (ceil(k/r) - 1)(delta - 1) + 1.
long d_opt(size_t n, size_t k, size_t r, size_t delta);

// V_q(n, s): number of vectors within Hamming distance s of a fixed center,
// and its coarse upper bound (1+s) * C(n, floor(n/2)) * q^s.
BigInt sphere_size(uint64_t q, size_t n, size_t s);
BigInt sphere_size_upper_bound(uint64_t q, size_t n, size_t s);

BigInt binomial(size_t n, size_t k);

// True iff the code restricted to the group's columns has minimum distance
// >= delta, i.e. any delta-1 erasures inside the group are repairable from
// the rest of it. Rank form: with t the rank of the group's columns, every
// subset of |group| - delta + 1 columns must still have rank t.
bool check_group_repairability(const LinearCode& code, const std::vector<size_t>& group, size_t delta);

struct LocalityReport {
    bool ok = false;
    // witnesses[j] is a repair set for symbol j (contains j, size <= r+delta-1,
    // passes check_group_repairability). With a hint, symbol j's witness is
    // its group. Empty on failure for the offending symbols.
    std::vector<std::vector<size_t>> witnesses;
    std::string failure;
};

struct LocalityOptions {
    uint64_t subset_budget = 1ull << 22;  // candidate sets tried in the hint-free search
};

// All-symbol (r, delta)-locality. With a hint the groups are validated and
// each checked; without one, a per-symbol witness search runs (witnesses
// need not partition the coordinates).
LocalityReport has_all_symbol_locality(const LinearCode& code, size_t r, size_t delta,
                                       const LocalityStructure* hint = nullptr,
                                       const LocalityOptions& options = {});

// d_opt(n,k,r,delta) - d, nonnegative for any code that actually has
// (r,delta)-locality. Locality is the caller's concern here.
long optimality_gap(const LinearCode& code, size_t r, size_t delta, const DistanceOptions& options = {});
bool is_optimal(const LinearCode& code, size_t r, size_t delta, const DistanceOptions& options = {});
// Within delta-1 of the bound.
bool is_almost_optimal(const LinearCode& code, size_t r, size_t delta, const DistanceOptions& options = {});

// Outcome record for a construction run; serialized next to the code file.
struct ConstructionReport {
    size_t n = 0;
    size_t k = 0;
    size_t r = 0;
    size_t delta = 2;
    uint64_t q = 0;
    std::vector<size_t> group_sizes;
    size_t zero_columns = 0;
    size_t achieved_distance = 0;
    long distance_bound = 0;
    long d_opt = 0;
    bool optimal = false;
    unsigned attempts = 0;
    uint64_t seed = 0;
};

}  // namespace lrc

#endif

#ifndef LRC_TRANSFORMS_HPP
#define LRC_TRANSFORMS_HPP

#include <cstdint>
#include <vector>

#include "lrc/code.hpp"

namespace lrc {

enum class DeepHoleStrategy {
    Auto,        // exhaustive when q^n fits the vector budget, else sampled
    Exhaustive,  // multi-source BFS over all of F_q^n; finds the smallest witness
    Sampled,     // random candidates, each verified against every codeword
};

struct DeepHoleOptions {
    DeepHoleStrategy strategy = DeepHoleStrategy::Sampled;
    uint64_t max_attempts = 0;  // 0 = 64 * d * C(n, n/2) / q, clamped to [100, 10^6]
    uint64_t seed = 0;
    uint64_t vector_budget = 1ull << 24;   // exhaustive: cap on q^n
    uint64_t message_budget = 1ull << 24;  // sampled: cap on q^k per candidate check
};

// Exact Hamming distance from x to the row space of generator (the zero-row
// matrix denotes the zero code). When early_below > 0 the scan may stop as
// soon as a codeword closer than early_below is found, returning that
// distance as a witness.
size_t distance_to_code(const Matrix& generator, const std::vector<uint32_t>& x,
                        uint64_t message_budget = 1ull << 24, size_t early_below = 0);

// A vector at Hamming distance >= min_distance from every codeword. Throws
// RetriesExhausted when no such vector exists (exhaustive) or none was found
// within the attempt budget (sampled). Existence is guaranteed whenever
// |C| * V_q(n, d-1) < q^n, see counting_inequality_holds.
std::vector<uint32_t> find_deep_hole(const Matrix& generator, size_t min_distance,
                                     const DeepHoleOptions& options = {});
std::vector<uint32_t> find_deep_hole(const LinearCode& code, size_t min_distance,
                                     const DeepHoleOptions& options = {});

// Exact-integer test of q^k * V_q(n, d-1) < q^n. When true, an exhaustive
// deep-hole search at distance d must succeed.
bool counting_inequality_holds(uint64_t q, size_t n, size_t k, size_t d);

struct EnlargeOptions {
    uint64_t seed = 0;
    DistanceOptions distance;
    LocalityOptions locality;
    DeepHoleOptions deep_hole{DeepHoleStrategy::Auto, 0, 0, 1ull << 24, 1ull << 24};
};

struct EnlargeResult {
    LinearCode code;                 // (n+1, k+1), minimum distance d, (r+1, 2)-locality
    size_t distance = 0;             // the shared minimum distance d, re-verified on the output
    std::vector<uint32_t> deep_hole; // the vector bordered onto the generator
    LocalityReport locality;         // (r+1, 2) witnesses for the output
};

// Border the generator with a deep-hole row and a fresh parity-free column:
// (n, k, d, r) -> (n+1, k+1, d, r+1), delta = 2. The input must have all
// symbol (r, 2)-locality with r < k. Every promised output property is
// verified before returning; a failed check throws VerificationError.
EnlargeResult enlarge(const LinearCode& code, size_t r, const EnlargeOptions& options = {});

// The subcode fixing the chosen coordinate to zero, with that coordinate
// deleted: n' = n-1, k' in {k-1, k}, d' >= d, locality r preserved. Throws
// when the result would have dimension 0.
LinearCode puncture(const LinearCode& code, size_t coordinate = 0);

}  // namespace lrc

#endif

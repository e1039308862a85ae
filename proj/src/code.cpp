#include "lrc/code.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "lrc/errors.hpp"

namespace lrc {

namespace {

bool next_combination(std::vector<size_t>& idx, size_t n) {
    const size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] < n - (k - i)) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// q^k clamped to cap+1 on overflow.
uint64_t pow_clamped(uint64_t q, size_t k, uint64_t cap) {
    uint64_t v = 1;
    for (size_t i = 0; i < k; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

size_t raw_weight(const std::vector<uint32_t>& v) {
    size_t w = 0;
    for (uint32_t x : v) w += (x != 0);
    return w;
}

// One enumeration block: messages with leading digit 1 at position lead, a
// fixed value at position lead+1 (second < q; second == q means "no second
// digit"), and all remaining digits free. Codewords are maintained
// incrementally: advancing a digit from v to v+1 adds (v+1 - v) * row, which
// for prime fields is always a plain row addition (including the carry wrap,
// since 0 - (p-1) = 1 mod p).
size_t block_min_weight(const Matrix& g, size_t lead, uint64_t second,
                        const std::vector<uint32_t>& step_delta, size_t stop_below) {
    const Field& f = *g.field();
    const uint64_t q = f.order();
    const size_t k = g.rows();
    const size_t n = g.cols();

    std::vector<uint32_t> cw(g.row_data(lead), g.row_data(lead) + n);
    size_t first_free = lead + 1;
    if (second != q) {
        const uint32_t scale = static_cast<uint32_t>(second);
        if (scale == 1) {
            for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], g.raw(lead + 1, j));
        } else if (scale != 0) {
            for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(scale, g.raw(lead + 1, j)));
        }
        first_free = lead + 2;
    }

    std::vector<uint32_t> digits(k, 0);
    size_t best = n + 1;
    for (;;) {
        const size_t w = raw_weight(cw);
        if (w < best) {
            best = w;
            if (best < stop_below || best == 1) return best;
        }
        // mixed-radix increment over the free positions
        size_t i = first_free;
        while (i < k) {
            const uint32_t v = digits[i];
            const uint32_t delta = step_delta[v];
            if (delta == 1) {
                for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], g.raw(i, j));
            } else {
                for (size_t j = 0; j < n; ++j) cw[j] = f.add(cw[j], f.mul(delta, g.raw(i, j)));
            }
            if (v + 1 < q) {
                digits[i] = v + 1;
                break;
            }
            digits[i] = 0;
            ++i;
        }
        if (i == k) break;
    }
    return best;
}

struct DistanceTask {
    size_t lead;
    uint64_t second;  // == q when the block has no second digit
};

}  // namespace

LinearCode::LinearCode(Matrix generator) : generator_(std::move(generator)) {
    const size_t k = generator_.rows();
    const size_t n = generator_.cols();
    if (k < 1) throw std::invalid_argument("code dimension must be at least 1");
    if (k > n) throw std::invalid_argument("code dimension exceeds length");
    if (generator_.rank() != k) {
        throw std::invalid_argument("generator matrix does not have full row rank");
    }
}

size_t minimum_distance(const LinearCode& code, const DistanceOptions& options) {
    const Matrix& g = code.generator();
    const Field& f = *g.field();
    const uint64_t q = f.order();
    const size_t k = code.dimension();
    const size_t n = code.length();

    if (pow_clamped(q, k, options.message_budget) > options.message_budget) {
        throw BudgetExceeded("q^k message enumeration exceeds the budget of " +
                             std::to_string(options.message_budget));
    }

    // Packed values enumerate the field, so the per-digit increment deltas
    // are just differences of consecutive packed values.
    std::vector<uint32_t> step_delta(q);
    for (uint64_t v = 0; v < q; ++v) {
        step_delta[v] = f.sub(static_cast<uint32_t>((v + 1) % q), static_cast<uint32_t>(v));
    }

    std::vector<DistanceTask> tasks;
    tasks.push_back({k - 1, q});
    for (size_t lead = 0; lead + 1 < k; ++lead) {
        for (uint64_t v = 0; v < q; ++v) tasks.push_back({lead, v});
    }

    const size_t stop_below = options.early_exit_at;
    if (options.workers <= 1) {
        size_t best = n + 1;
        for (const DistanceTask& t : tasks) {
            best = std::min(best, block_min_weight(g, t.lead, t.second, step_delta, stop_below));
            if (best < stop_below || best == 1) break;
        }
        return best;
    }

    std::atomic<size_t> next{0};
    std::atomic<size_t> best{n + 1};
    auto run = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            size_t current = best.load();
            if (current < stop_below || current == 1) return;
            const size_t w =
                block_min_weight(g, tasks[i].lead, tasks[i].second, step_delta, stop_below);
            while (w < current && !best.compare_exchange_weak(current, w)) {
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < options.workers; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    return best.load();
}

long d_opt(size_t n, size_t k, size_t r, size_t delta) {
    if (k < 1 || k > n) throw std::invalid_argument("d_opt requires 1 <= k <= n");
    if (r < 1 || r > k) throw std::invalid_argument("d_opt requires 1 <= r <= k");
    if (delta < 2) throw std::invalid_argument("d_opt requires delta >= 2");
    const long ceil_kr = static_cast<long>((k + r - 1) / r);
    return static_cast<long>(n) - static_cast<long>(k) - (ceil_kr - 1) * static_cast<long>(delta - 1) + 1;
}

BigInt binomial(size_t n, size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (size_t i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        r /= static_cast<unsigned long>(i);
    }
    return r;
}

BigInt sphere_size(uint64_t q, size_t n, size_t s) {
    if (s > n) throw std::invalid_argument("sphere radius exceeds the length");
    BigInt total = 0;
    BigInt qm1_pow = 1;
    for (size_t i = 0; i <= s; ++i) {
        total += binomial(n, i) * qm1_pow;
        qm1_pow *= static_cast<unsigned long>(q - 1);
    }
    return total;
}

BigInt sphere_size_upper_bound(uint64_t q, size_t n, size_t s) {
    if (s > n) throw std::invalid_argument("sphere radius exceeds the length");
    BigInt qs = 1;
    for (size_t i = 0; i < s; ++i) qs *= static_cast<unsigned long>(q);
    return BigInt(1 + s) * binomial(n, n / 2) * qs;
}

bool check_group_repairability(const LinearCode& code, const std::vector<size_t>& group, size_t delta) {
    if (group.empty()) throw std::invalid_argument("repair group must be nonempty");
    if (delta < 1) throw std::invalid_argument("delta must be at least 1");
    const Matrix& g = code.generator();
    const size_t t = rank_of_columns(g, group);  // validates the indices
    const size_t s = group.size();
    if (s < delta) return t == 0;  // only an all-zero group survives erasing delta-1 of <delta symbols
    const size_t keep = s - delta + 1;
    std::vector<size_t> sel(keep);
    for (size_t i = 0; i < keep; ++i) sel[i] = i;
    do {
        std::vector<size_t> cols(keep);
        for (size_t i = 0; i < keep; ++i) cols[i] = group[sel[i]];
        if (rank_of_columns(g, cols) != t) return false;
    } while (next_combination(sel, s));
    return true;
}

void LocalityStructure::validate(size_t n) const {
    if (delta < 2) throw std::invalid_argument("locality requires delta >= 2");
    if (r < 1) throw std::invalid_argument("locality requires r >= 1");
    std::vector<bool> seen(n, false);
    for (const auto& group : groups) {
        if (group.empty()) throw std::invalid_argument("empty repair group");
        if (group.size() > r + delta - 1) throw std::invalid_argument("repair group larger than r + delta - 1");
        for (size_t idx : group) {
            if (idx >= n) throw std::invalid_argument("repair group index out of range");
            if (seen[idx]) throw std::invalid_argument("repair groups overlap");
            seen[idx] = true;
        }
    }
    for (size_t i = 0; i < n; ++i) {
        if (!seen[i]) throw std::invalid_argument("repair groups do not cover every symbol");
    }
}

LocalityReport has_all_symbol_locality(const LinearCode& code, size_t r, size_t delta,
                                       const LocalityStructure* hint, const LocalityOptions& options) {
    if (r < 1 || r > code.dimension()) throw std::invalid_argument("locality requires 1 <= r <= k");
    if (delta < 2) throw std::invalid_argument("locality requires delta >= 2");
    const size_t n = code.length();
    LocalityReport report;
    report.witnesses.assign(n, {});

    if (hint != nullptr) {
        if (hint->r != r || hint->delta != delta) {
            throw std::invalid_argument("hint structure is for different (r, delta) parameters");
        }
        hint->validate(n);
        for (const auto& group : hint->groups) {
            if (group.size() < delta && rank_of_columns(code.generator(), group) != 0) {
                report.failure = "group smaller than delta has nonzero columns";
                return report;
            }
            if (!check_group_repairability(code, group, delta)) {
                report.failure = "group fails the delta-1 erasure check";
                return report;
            }
            for (size_t idx : group) report.witnesses[idx] = group;
        }
        report.ok = true;
        return report;
    }

    uint64_t tried = 0;
    std::vector<size_t> others;
    others.reserve(n - 1);
    bool all_found = true;
    for (size_t j = 0; j < n; ++j) {
        others.clear();
        for (size_t i = 0; i < n; ++i) {
            if (i != j) others.push_back(i);
        }
        bool found = false;
        for (size_t size = 1; size <= r + delta - 1 && !found; ++size) {
            if (size - 1 > others.size()) break;
            std::vector<size_t> sel(size - 1);
            for (size_t i = 0; i + 1 < size; ++i) sel[i] = i;
            do {
                if (++tried > options.subset_budget) {
                    throw BudgetExceeded("locality witness search exceeds the subset budget");
                }
                std::vector<size_t> candidate;
                candidate.reserve(size);
                candidate.push_back(j);
                for (size_t idx : sel) candidate.push_back(others[idx]);
                std::sort(candidate.begin(), candidate.end());
                if (check_group_repairability(code, candidate, delta)) {
                    report.witnesses[j] = std::move(candidate);
                    found = true;
                    break;
                }
            } while (size > 1 && next_combination(sel, others.size()));
        }
        if (!found) {
            all_found = false;
            if (report.failure.empty()) {
                report.failure = "symbol " + std::to_string(j) + " has no (r, delta) repair set";
            }
        }
    }
    report.ok = all_found;
    return report;
}

long optimality_gap(const LinearCode& code, size_t r, size_t delta, const DistanceOptions& options) {
    const size_t d = minimum_distance(code, options);
    return d_opt(code.length(), code.dimension(), r, delta) - static_cast<long>(d);
}

bool is_optimal(const LinearCode& code, size_t r, size_t delta, const DistanceOptions& options) {
    return optimality_gap(code, r, delta, options) == 0;
}

bool is_almost_optimal(const LinearCode& code, size_t r, size_t delta, const DistanceOptions& options) {
    return optimality_gap(code, r, delta, options) <= static_cast<long>(delta - 1);
}

}  // namespace lrc

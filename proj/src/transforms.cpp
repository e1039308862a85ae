#include "lrc/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lrc/errors.hpp"
#include "lrc/rng.hpp"

namespace lrc {

namespace {

uint64_t pow_clamped(uint64_t q, size_t k, uint64_t cap) {
    uint64_t v = 1;
    for (size_t i = 0; i < k; ++i) {
        if (v > cap / q) return cap + 1;
        v *= q;
    }
    return v;
}

// Visits every codeword of the row space exactly once (all q^k messages,
// zero included), maintaining the current codeword incrementally. The
// visitor returns false to stop early.
template <typename Visit>
void for_each_codeword(const Matrix& g, Visit&& visit) {
    const Field& f = *g.field();
    const uint64_t q = f.order();
    const size_t k = g.rows();
    const size_t n = g.cols();

    std::vector<uint32_t> step_delta(q);
    for (uint64_t v = 0; v < q; ++v) {
        step_delta[v] = f.sub(static_cast<uint32_t>((v + 1) % q), static_cast<uint32_t>(v));
    }

    std::vector<uint32_t> cw(n, 0);
    std::vector<uint32_t> digits(k, 0);
    for (;;) {
        if (!visit(cw)) return;
        size_t i = 0;
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
        if (i == k) return;
    }
}

uint64_t vector_index(uint64_t q, const std::vector<uint32_t>& v) {
    uint64_t idx = 0;
    for (size_t j = v.size(); j-- > 0;) idx = idx * q + v[j];
    return idx;
}

std::vector<uint32_t> vector_from_index(uint64_t q, size_t n, uint64_t idx) {
    std::vector<uint32_t> v(n);
    for (size_t j = 0; j < n; ++j) {
        v[j] = static_cast<uint32_t>(idx % q);
        idx /= q;
    }
    return v;
}

std::vector<uint32_t> deep_hole_exhaustive(const Matrix& g, size_t min_distance,
                                           const DeepHoleOptions& options) {
    const uint64_t q = g.field()->order();
    const size_t n = g.cols();
    const uint64_t space = pow_clamped(q, n, options.vector_budget);
    if (space > options.vector_budget) {
        throw BudgetExceeded("q^n exceeds the exhaustive deep-hole budget");
    }

    // Multi-source BFS from all codewords, out to radius min_distance - 1.
    // Work is bounded by q^n * n * (q-1) regardless of ball overlap.
    constexpr uint8_t kUnreached = 0xFF;
    std::vector<uint8_t> level(space, kUnreached);
    std::vector<uint64_t> frontier;
    for_each_codeword(g, [&](const std::vector<uint32_t>& cw) {
        const uint64_t idx = vector_index(q, cw);
        if (level[idx] == kUnreached) {
            level[idx] = 0;
            frontier.push_back(idx);
        }
        return true;
    });

    std::vector<uint64_t> next;
    for (size_t radius = 1; radius < min_distance && !frontier.empty(); ++radius) {
        next.clear();
        for (const uint64_t idx : frontier) {
            uint64_t digit_base = 1;
            uint64_t rest = idx;
            for (size_t pos = 0; pos < n; ++pos) {
                const uint64_t cur = rest % q;
                const uint64_t base = idx - cur * digit_base;
                for (uint64_t v = 0; v < q; ++v) {
                    if (v == cur) continue;
                    const uint64_t nb = base + v * digit_base;
                    if (level[nb] == kUnreached) {
                        level[nb] = static_cast<uint8_t>(radius);
                        next.push_back(nb);
                    }
                }
                digit_base *= q;
                rest /= q;
            }
        }
        frontier.swap(next);
    }

    for (uint64_t idx = 0; idx < space; ++idx) {
        if (level[idx] == kUnreached) return vector_from_index(q, n, idx);
    }
    throw RetriesExhausted("no vector at distance >= " + std::to_string(min_distance) +
                           " from the code exists");
}

std::vector<uint32_t> deep_hole_sampled(const Matrix& g, size_t min_distance,
                                        const DeepHoleOptions& options) {
    const Field& f = *g.field();
    const uint64_t q = f.order();
    const size_t n = g.cols();
    if (pow_clamped(q, g.rows(), options.message_budget) > options.message_budget) {
        throw BudgetExceeded("q^k exceeds the per-candidate codeword budget");
    }

    uint64_t attempts = options.max_attempts;
    if (attempts == 0) {
        BigInt suggested = BigInt(64) * static_cast<unsigned long>(min_distance) * binomial(n, n / 2) /
                           static_cast<unsigned long>(q);
        if (suggested > 1'000'000) suggested = 1'000'000;
        attempts = std::max<uint64_t>(100, suggested.convert_to<uint64_t>());
    }

    Rng rng(options.seed);
    std::vector<uint32_t> x(n);
    for (uint64_t attempt = 0; attempt < attempts; ++attempt) {
        for (size_t j = 0; j < n; ++j) x[j] = static_cast<uint32_t>(rng.below(q));
        if (distance_to_code(g, x, options.message_budget, min_distance) >= min_distance) {
            return x;
        }
    }
    throw RetriesExhausted("no deep hole found in " + std::to_string(attempts) + " attempts");
}

}  // namespace

size_t distance_to_code(const Matrix& generator, const std::vector<uint32_t>& x,
                        uint64_t message_budget, size_t early_below) {
    if (x.size() != generator.cols()) throw std::invalid_argument("vector length mismatch");
    if (pow_clamped(generator.field()->order(), generator.rows(), message_budget) > message_budget) {
        throw BudgetExceeded("q^k codeword enumeration exceeds the budget");
    }
    const size_t n = generator.cols();
    size_t best = n + 1;
    for_each_codeword(generator, [&](const std::vector<uint32_t>& cw) {
        size_t dist = 0;
        for (size_t j = 0; j < n; ++j) dist += (cw[j] != x[j]);
        if (dist < best) {
            best = dist;
            if (best < early_below || best == 0) return false;
        }
        return true;
    });
    return best;
}

std::vector<uint32_t> find_deep_hole(const Matrix& generator, size_t min_distance,
                                     const DeepHoleOptions& options) {
    if (min_distance < 1) throw std::invalid_argument("deep hole distance must be at least 1");
    if (min_distance > generator.cols()) {
        throw RetriesExhausted("no vector can be farther than n from the zero codeword");
    }
    DeepHoleStrategy strategy = options.strategy;
    if (strategy == DeepHoleStrategy::Auto) {
        const uint64_t space =
            pow_clamped(generator.field()->order(), generator.cols(), options.vector_budget);
        strategy = space <= options.vector_budget ? DeepHoleStrategy::Exhaustive
                                                  : DeepHoleStrategy::Sampled;
    }
    return strategy == DeepHoleStrategy::Exhaustive
               ? deep_hole_exhaustive(generator, min_distance, options)
               : deep_hole_sampled(generator, min_distance, options);
}

std::vector<uint32_t> find_deep_hole(const LinearCode& code, size_t min_distance,
                                     const DeepHoleOptions& options) {
    return find_deep_hole(code.generator(), min_distance, options);
}

bool counting_inequality_holds(uint64_t q, size_t n, size_t k, size_t d) {
    if (d < 1 || d > n + 1) throw std::invalid_argument("distance out of range");
    BigInt qn = 1;
    for (size_t i = 0; i < n; ++i) qn *= static_cast<unsigned long>(q);
    BigInt qk = 1;
    for (size_t i = 0; i < k; ++i) qk *= static_cast<unsigned long>(q);
    return qk * sphere_size(q, n, d - 1) < qn;
}

EnlargeResult enlarge(const LinearCode& code, size_t r, const EnlargeOptions& options) {
    const size_t k = code.dimension();
    const size_t n = code.length();
    if (r < 1 || r >= k) throw std::invalid_argument("enlarge requires 1 <= r < k");

    LocalityReport input_locality = has_all_symbol_locality(code, r, 2, nullptr, options.locality);
    if (!input_locality.ok) {
        throw std::invalid_argument("input code lacks all-symbol (r, 2)-locality: " +
                                    input_locality.failure);
    }

    const size_t d = minimum_distance(code, options.distance);

    DeepHoleOptions hole_options = options.deep_hole;
    hole_options.seed = options.seed;
    const std::vector<uint32_t> x = find_deep_hole(code, d, hole_options);

    // Bordered generator: G extended by a zero column, with (x | 1) appended
    // as a new row.
    const Matrix& g = code.generator();
    Matrix bordered(code.field(), k + 1, n + 1);
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < n; ++j) bordered.set_raw(i, j, g.raw(i, j));
    }
    for (size_t j = 0; j < n; ++j) bordered.set_raw(k, j, x[j]);
    bordered.set_raw(k, n, 1);

    LinearCode enlarged{std::move(bordered)};

    const size_t d_out = minimum_distance(enlarged, options.distance);
    if (d_out != d) {
        throw VerificationError("enlarged code has distance " + std::to_string(d_out) +
                                ", expected " + std::to_string(d));
    }
    LocalityReport locality = has_all_symbol_locality(enlarged, r + 1, 2, nullptr, options.locality);
    if (!locality.ok) {
        throw VerificationError("enlarged code lacks (r+1, 2)-locality: " + locality.failure);
    }
    return EnlargeResult{std::move(enlarged), d_out, x, std::move(locality)};
}

LinearCode puncture(const LinearCode& code, size_t coordinate) {
    const size_t n = code.length();
    const size_t k = code.dimension();
    if (n < 2) throw std::invalid_argument("puncturing needs length at least 2");
    if (coordinate >= n) throw std::out_of_range("puncture coordinate out of range");

    const Matrix& g = code.generator();
    const Field& f = *code.field();

    std::vector<std::vector<uint32_t>> rows(k);
    for (size_t i = 0; i < k; ++i) {
        rows[i].assign(g.row_data(i), g.row_data(i) + n);
    }

    // Concentrate the coordinate's column into one row, drop that row (the
    // remaining rows generate the subcode vanishing there), then delete the
    // coordinate.
    size_t pivot = k;
    for (size_t i = 0; i < k; ++i) {
        if (rows[i][coordinate] != 0) {
            pivot = i;
            break;
        }
    }
    if (pivot != k) {
        const uint32_t pivot_inv = f.inv(rows[pivot][coordinate]);
        for (size_t i = 0; i < k; ++i) {
            if (i == pivot || rows[i][coordinate] == 0) continue;
            const uint32_t scale = f.mul(rows[i][coordinate], pivot_inv);
            for (size_t j = 0; j < n; ++j) {
                rows[i][j] = f.sub(rows[i][j], f.mul(scale, rows[pivot][j]));
            }
        }
        rows.erase(rows.begin() + static_cast<ptrdiff_t>(pivot));
    }
    if (rows.empty()) throw std::invalid_argument("puncturing collapses the code to dimension 0");

    for (auto& row : rows) row.erase(row.begin() + static_cast<ptrdiff_t>(coordinate));
    return LinearCode(Matrix::from_rows(code.field(), rows));
}

}  // namespace lrc

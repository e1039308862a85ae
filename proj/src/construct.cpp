#include "lrc/construct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "lrc/errors.hpp"
#include "lrc/rng.hpp"

namespace lrc {

namespace {

// Repair block B for a group with t free columns: a t x c matrix all of
// whose square submatrices are invertible. delta = 2 needs only a nonzero
// column, which exists over every field; larger delta uses a Cauchy block.
Matrix repair_block(const FieldPtr& field, size_t t, size_t c) {
    if (c == 1) {
        Matrix ones(field, t, 1);
        for (size_t i = 0; i < t; ++i) ones.set_raw(i, 0, 1);
        return ones;
    }
    return cauchy_matrix(field, t, c);
}

struct AttemptOutcome {
    std::optional<ConstructResult> result;
};

// One sampling attempt of the random construction. Returns nothing when the
// draw fails a verification step.
std::optional<ConstructResult> random_attempt(size_t n, size_t k, const GroupPlan& plan,
                                              const FieldPtr& field,
                                              const std::map<size_t, Matrix>& blocks, long bound,
                                              long dopt, Rng rng, const ConstructOptions& options) {
    const Field& f = *field;
    const uint64_t q = f.order();
    Matrix gen(field, k, n);
    LocalityStructure structure;
    structure.r = plan.r;
    structure.delta = plan.delta;

    size_t cursor = 0;
    for (size_t s : plan.sizes) {
        const size_t t = s - plan.delta + 1;
        Matrix e(field, k, t);
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < t; ++j) e.set_raw(i, j, static_cast<uint32_t>(rng.below(q)));
        }
        const Matrix repair = e * blocks.at(t);
        std::vector<size_t> group(s);
        for (size_t j = 0; j < t; ++j) {
            for (size_t i = 0; i < k; ++i) gen.set_raw(i, cursor, e.raw(i, j));
            group[j] = cursor++;
        }
        for (size_t j = 0; j + 1 < plan.delta; ++j) {
            for (size_t i = 0; i < k; ++i) gen.set_raw(i, cursor, repair.raw(i, j));
            group[t + j] = cursor++;
        }
        structure.groups.push_back(std::move(group));
    }
    if (plan.zero_columns > 0) {
        std::vector<size_t> zero_group(plan.zero_columns);
        for (size_t j = 0; j < plan.zero_columns; ++j) zero_group[j] = cursor++;
        structure.groups.push_back(std::move(zero_group));
    }

    if (gen.rank() != k) return std::nullopt;
    LinearCode code{std::move(gen)};
    for (const auto& group : structure.groups) {
        if (!check_group_repairability(code, group, plan.delta)) return std::nullopt;
    }

    DistanceOptions dist = options.distance;
    dist.early_exit_at = bound > 0 ? static_cast<size_t>(bound) : 0;
    const size_t d = minimum_distance(code, dist);
    if (static_cast<long>(d) < bound) return std::nullopt;

    ConstructionReport report;
    report.n = n;
    report.k = k;
    report.r = plan.r;
    report.delta = plan.delta;
    report.q = q;
    report.group_sizes = plan.sizes;
    report.zero_columns = plan.zero_columns;
    report.achieved_distance = d;
    report.distance_bound = bound;
    report.d_opt = dopt;
    report.optimal = static_cast<long>(d) == dopt;
    report.seed = options.seed;
    return ConstructResult{std::move(code), std::move(structure), report};
}

}  // namespace

size_t GroupPlan::covered_length() const {
    return std::accumulate(sizes.begin(), sizes.end(), size_t{0});
}

std::vector<size_t> GroupPlan::free_ranks() const {
    std::vector<size_t> t(sizes.size());
    for (size_t j = 0; j < sizes.size(); ++j) t[j] = sizes[j] - delta + 1;
    return t;
}

void GroupPlan::validate(size_t k) const {
    if (delta < 2) throw std::invalid_argument("plan requires delta >= 2");
    if (r < 1) throw std::invalid_argument("plan requires r >= 1");
    if (sizes.empty()) throw std::invalid_argument("plan has no groups");
    for (size_t s : sizes) {
        if (s < delta || s > r + delta - 1) {
            throw std::invalid_argument("group size " + std::to_string(s) +
                                        " outside [delta, r+delta-1]");
        }
    }
    if (zero_columns >= delta) {
        throw std::invalid_argument("zero-column tail must be shorter than delta");
    }
    size_t total_free = 0;
    for (size_t t : free_ranks()) total_free += t;
    if (total_free < k) {
        throw std::invalid_argument("plan infeasible: sum of group free ranks is below k");
    }
}

GroupPlan partition_lengths(size_t n, size_t k, size_t r, size_t delta) {
    if (delta < 2) throw std::invalid_argument("delta must be at least 2");
    if (r < 1 || r > k) throw std::invalid_argument("requires 1 <= r <= k");
    if (k < 1 || k >= n) throw std::invalid_argument("requires 1 <= k < n");

    const size_t width = r + delta - 1;
    const size_t full = n / width;
    const size_t b = n % width;

    GroupPlan plan;
    plan.r = r;
    plan.delta = delta;
    if (b == 0) {
        plan.sizes.assign(full, width);
    } else if (b >= delta) {
        plan.sizes.push_back(b);
        plan.sizes.insert(plan.sizes.end(), full, width);
    } else {
        if (full == 0) throw std::invalid_argument("n too small for any repair group");
        plan.sizes.assign(full, width);
        plan.zero_columns = b;
    }
    plan.validate(k);
    return plan;
}

ZStatistic compute_z(const GroupPlan& plan, size_t k) {
    plan.validate(k);
    std::vector<size_t> t = plan.free_ranks();
    std::sort(t.begin(), t.end());  // the z inequalities assume ascending sizes
    ZStatistic stat;
    stat.prefix_sums.resize(t.size());
    size_t running = 0;
    for (size_t j = 0; j < t.size(); ++j) {
        running += t[j];
        stat.prefix_sums[j] = running;
        if (running <= k - 1) stat.z = j + 1;
    }
    return stat;
}

long distance_bound(size_t n_covered, size_t k, size_t delta, size_t z) {
    return static_cast<long>(n_covered) - static_cast<long>(k) -
           static_cast<long>(z) * static_cast<long>(delta - 1) + 1;
}

ConstructResult random_lrc(size_t n, size_t k, const GroupPlan& plan, FieldPtr field,
                           const ConstructOptions& options) {
    plan.validate(k);
    if (plan.total_length() != n) throw std::invalid_argument("plan does not cover length n");
    if (plan.r >= k) throw std::invalid_argument("random construction requires r < k");

    std::map<size_t, Matrix> blocks;
    for (size_t t : plan.free_ranks()) {
        if (!blocks.contains(t)) blocks.emplace(t, repair_block(field, t, plan.delta - 1));
    }
    const long bound = distance_bound(plan.covered_length(), k, plan.delta, compute_z(plan, k).z);
    const long dopt = d_opt(n, k, plan.r, plan.delta);

    Rng root(options.seed);
    for (unsigned attempt = 1; attempt <= options.max_retries; ++attempt) {
        auto outcome =
            random_attempt(n, k, plan, field, blocks, bound, dopt, root.split(attempt), options);
        if (outcome) {
            outcome->report.attempts = attempt;
            return std::move(*outcome);
        }
    }
    throw RetriesExhausted("random construction failed in " + std::to_string(options.max_retries) +
                           " attempts (field may be too small)");
}

SelectionCheck independent_selection_property(const std::vector<Matrix>& groups, size_t k,
                                              const std::vector<size_t>& caps, uint64_t budget) {
    if (groups.size() != caps.size()) throw std::invalid_argument("one cap per group required");
    if (groups.empty()) return {};
    const FieldPtr& field = groups.front().field();
    const size_t rows = groups.front().rows();
    for (const Matrix& g : groups) {
        if (!g.field()->same_as(*field) || g.rows() != rows) {
            throw std::invalid_argument("groups must share the field and row count");
        }
    }

    std::vector<size_t> limit(groups.size());
    size_t available = 0;
    for (size_t j = 0; j < groups.size(); ++j) {
        limit[j] = std::min(caps[j], groups[j].cols());
        available += limit[j];
    }
    const size_t target = std::min(k, available);
    if (target == 0) return {};

    uint64_t checked = 0;
    std::vector<std::vector<size_t>> chosen(groups.size());

    // Enumerates column counts per group summing to target, then every
    // combination of concrete columns, checking each selection's rank.
    std::function<SelectionCheck(size_t, size_t)> recurse = [&](size_t gi, size_t remaining) -> SelectionCheck {
        if (gi == groups.size()) {
            if (remaining != 0) return {};
            if (++checked > budget) {
                throw BudgetExceeded("selection-property enumeration exceeds the budget");
            }
            // assemble and rank-check the selection
            std::vector<std::vector<uint32_t>> sel_rows(rows, std::vector<uint32_t>(target));
            size_t col = 0;
            for (size_t j = 0; j < groups.size(); ++j) {
                for (size_t c : chosen[j]) {
                    for (size_t i = 0; i < rows; ++i) sel_rows[i][col] = groups[j].raw(i, c);
                    ++col;
                }
            }
            if (Matrix::from_rows(field, sel_rows).rank() != target) {
                SelectionCheck fail;
                fail.ok = false;
                for (size_t j = 0; j < groups.size(); ++j) {
                    for (size_t c : chosen[j]) fail.witness.emplace_back(j, c);
                }
                return fail;
            }
            return {};
        }
        size_t max_here = std::min(limit[gi], remaining);
        size_t rest_available = 0;
        for (size_t j = gi + 1; j < groups.size(); ++j) rest_available += limit[j];
        const size_t min_here = remaining > rest_available ? remaining - rest_available : 0;
        for (size_t take = min_here; take <= max_here; ++take) {
            std::vector<size_t> idx(take);
            for (size_t i = 0; i < take; ++i) idx[i] = i;
            bool more = true;
            while (more) {
                chosen[gi] = idx;
                SelectionCheck sub = recurse(gi + 1, remaining - take);
                if (!sub.ok) return sub;
                if (take == 0) break;
                // next combination of columns within this group
                more = false;
                for (size_t i = take; i-- > 0;) {
                    if (idx[i] < groups[gi].cols() - (take - i)) {
                        ++idx[i];
                        for (size_t j2 = i + 1; j2 < take; ++j2) idx[j2] = idx[j2 - 1] + 1;
                        more = true;
                        break;
                    }
                }
            }
            chosen[gi].clear();
        }
        return {};
    };
    return recurse(0, target);
}

ConstructResult greedy_lrc(size_t n, size_t k, size_t r, size_t delta, FieldPtr field,
                           const ConstructOptions& options) {
    const GroupPlan plan = partition_lengths(n, k, r, delta);
    const Field& f = *field;
    const uint64_t q = f.order();
    const std::vector<size_t> free_ranks = plan.free_ranks();
    const size_t t_max = *std::max_element(free_ranks.begin(), free_ranks.end());
    const Matrix block = repair_block(field, t_max, delta - 1);
    const long bound = distance_bound(plan.covered_length(), k, delta, compute_z(plan, k).z);
    const long dopt = d_opt(n, k, r, delta);

    Rng root(options.seed);
    for (unsigned attempt = 1; attempt <= options.max_retries; ++attempt) {
        Rng rng = root.split(attempt);
        std::vector<Matrix> finished;       // completed group column sets
        std::vector<size_t> finished_caps;  // their free ranks
        bool failed = false;

        for (size_t gi = 0; gi < plan.sizes.size() && !failed; ++gi) {
            const size_t t = free_ranks[gi];
            std::vector<std::vector<uint32_t>> gens;          // accepted generators, as columns
            Matrix partial_repair(field, k, delta - 1);       // sum of B[l][m] * g_l so far

            for (size_t j = 1; j <= t && !failed; ++j) {
                bool accepted = false;
                for (unsigned draw = 0; draw < options.candidate_attempts; ++draw) {
                    std::vector<uint32_t> g(k);
                    bool zero = true;
                    for (size_t i = 0; i < k; ++i) {
                        g[i] = static_cast<uint32_t>(rng.below(q));
                        zero &= (g[i] == 0);
                    }
                    if (zero) continue;

                    // partial group: accepted generators + candidate, plus the
                    // partial repair columns including the candidate's share
                    Matrix candidate_group(field, k, j + delta - 1);
                    for (size_t c = 0; c + 1 < j; ++c) {
                        for (size_t i = 0; i < k; ++i) candidate_group.set_raw(i, c, gens[c][i]);
                    }
                    for (size_t i = 0; i < k; ++i) candidate_group.set_raw(i, j - 1, g[i]);
                    for (size_t m = 0; m + 1 < delta; ++m) {
                        const uint32_t coeff = block.raw(j - 1, m);
                        for (size_t i = 0; i < k; ++i) {
                            const uint32_t v = f.add(partial_repair.raw(i, m), f.mul(coeff, g[i]));
                            candidate_group.set_raw(i, j + m, v);
                        }
                    }

                    std::vector<Matrix> family = finished;
                    family.push_back(candidate_group);
                    std::vector<size_t> caps = finished_caps;
                    caps.push_back(j);
                    if (!independent_selection_property(family, k, caps, options.selection_budget).ok) {
                        continue;
                    }

                    gens.push_back(g);
                    for (size_t m = 0; m + 1 < delta; ++m) {
                        const uint32_t coeff = block.raw(j - 1, m);
                        for (size_t i = 0; i < k; ++i) {
                            partial_repair.set_raw(
                                i, m, f.add(partial_repair.raw(i, m), f.mul(coeff, g[i])));
                        }
                    }
                    accepted = true;
                    break;
                }
                if (!accepted) failed = true;
            }
            if (failed) break;

            Matrix group_cols(field, k, plan.sizes[gi]);
            for (size_t c = 0; c < t; ++c) {
                for (size_t i = 0; i < k; ++i) group_cols.set_raw(i, c, gens[c][i]);
            }
            for (size_t m = 0; m + 1 < delta; ++m) {
                for (size_t i = 0; i < k; ++i) {
                    group_cols.set_raw(i, t + m, partial_repair.raw(i, m));
                }
            }
            finished.push_back(std::move(group_cols));
            finished_caps.push_back(t);
        }
        if (failed) continue;

        // assemble the generator and verify exactly like the random route
        Matrix gen(field, k, n);
        LocalityStructure structure;
        structure.r = r;
        structure.delta = delta;
        size_t cursor = 0;
        for (size_t gi = 0; gi < finished.size(); ++gi) {
            std::vector<size_t> group(plan.sizes[gi]);
            for (size_t c = 0; c < plan.sizes[gi]; ++c) {
                for (size_t i = 0; i < k; ++i) gen.set_raw(i, cursor, finished[gi].raw(i, c));
                group[c] = cursor++;
            }
            structure.groups.push_back(std::move(group));
        }
        if (plan.zero_columns > 0) {
            std::vector<size_t> zero_group(plan.zero_columns);
            for (size_t j = 0; j < plan.zero_columns; ++j) zero_group[j] = cursor++;
            structure.groups.push_back(std::move(zero_group));
        }

        if (gen.rank() != k) continue;
        LinearCode code{std::move(gen)};
        bool groups_ok = true;
        for (const auto& group : structure.groups) {
            groups_ok = groups_ok && check_group_repairability(code, group, delta);
        }
        if (!groups_ok) continue;

        DistanceOptions dist = options.distance;
        dist.early_exit_at = bound > 0 ? static_cast<size_t>(bound) : 0;
        const size_t d = minimum_distance(code, dist);
        if (static_cast<long>(d) < bound) continue;

        ConstructionReport report;
        report.n = n;
        report.k = k;
        report.r = r;
        report.delta = delta;
        report.q = q;
        report.group_sizes = plan.sizes;
        report.zero_columns = plan.zero_columns;
        report.achieved_distance = d;
        report.distance_bound = bound;
        report.d_opt = dopt;
        report.optimal = static_cast<long>(d) == dopt;
        report.attempts = attempt;
        report.seed = options.seed;
        return ConstructResult{std::move(code), std::move(structure), report};
    }
    throw RetriesExhausted("greedy construction failed in " + std::to_string(options.max_retries) +
                           " attempts");
}

std::vector<MonteCarloRow> monte_carlo(size_t n, size_t k, const GroupPlan& plan,
                                       const std::vector<FieldPtr>& fields, unsigned trials,
                                       uint64_t seed, const ConstructOptions& options,
                                       unsigned workers) {
    plan.validate(k);
    if (plan.total_length() != n) throw std::invalid_argument("plan does not cover length n");
    if (trials == 0) throw std::invalid_argument("at least one trial required");
    const long bound = distance_bound(plan.covered_length(), k, plan.delta, compute_z(plan, k).z);
    const long dopt = d_opt(n, k, plan.r, plan.delta);

    std::vector<MonteCarloRow> rows;
    const Rng root(seed);
    for (const FieldPtr& field : fields) {
        std::map<size_t, Matrix> blocks;
        for (size_t t : plan.free_ranks()) {
            if (!blocks.contains(t)) blocks.emplace(t, repair_block(field, t, plan.delta - 1));
        }
        const Rng field_stream = root.split(field->order());

        std::vector<unsigned> success(workers, 0);
        std::vector<uint64_t> dist_sum(workers, 0);
        auto run_range = [&](unsigned w, unsigned begin, unsigned end) {
            for (unsigned trial = begin; trial < end; ++trial) {
                ConstructOptions trial_options = options;
                trial_options.seed = field_stream.split(trial).seed();
                auto outcome = random_attempt(n, k, plan, field, blocks, bound, dopt,
                                              Rng(trial_options.seed).split(1), trial_options);
                if (outcome) {
                    ++success[w];
                    dist_sum[w] += outcome->report.achieved_distance;
                }
            }
        };
        if (workers <= 1) {
            run_range(0, 0, trials);
        } else {
            std::vector<std::thread> pool;
            const unsigned chunk = (trials + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const unsigned begin = std::min(trials, w * chunk);
                const unsigned end = std::min(trials, begin + chunk);
                pool.emplace_back(run_range, w, begin, end);
            }
            for (auto& t : pool) t.join();
        }

        MonteCarloRow row;
        row.q = field->order();
        row.trials = trials;
        row.successes = std::accumulate(success.begin(), success.end(), 0u);
        uint64_t total_distance = std::accumulate(dist_sum.begin(), dist_sum.end(), uint64_t{0});
        row.rate = static_cast<double>(row.successes) / trials;
        row.mean_distance =
            row.successes > 0 ? static_cast<double>(total_distance) / row.successes : 0.0;
        row.bound = bound;
        row.d_opt = dopt;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lrc

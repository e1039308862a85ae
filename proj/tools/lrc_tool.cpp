// Command-line front end: constructions, transforms and verification over
// code files. Human-readable text goes to stdout; machine-readable artifacts
// (code files, reports, CSV) go to the paths given with -o.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lrc/construct.hpp"
#include "lrc/errors.hpp"
#include "lrc/serialize.hpp"
#include "lrc/transforms.hpp"

namespace {

using namespace lrc;

// exit codes: 0 ok, 1 I/O or internal, 2 bad arguments, 3 budget exceeded,
// 4 retries/search exhausted, 5 verification failed
enum ExitCode : int {
    kOk = 0,
    kRuntimeError = 1,
    kUsageError = 2,
    kBudgetError = 3,
    kRetriesError = 4,
    kVerificationError = 5,
};

uint64_t env_u64(const char* name, uint64_t fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    return std::strtoull(value, nullptr, 10);
}

// Interprets q as p^m with p its smallest prime factor.
FieldPtr field_from_order(uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be at least 2");
    uint64_t p = q;
    for (uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    uint32_t m = 0;
    uint64_t rest = q;
    while (rest > 1 && rest % p == 0) {
        rest /= p;
        ++m;
    }
    if (rest != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    return Field::make(p, m);
}

GroupPlan plan_for(size_t n, size_t k, size_t r, size_t delta, std::vector<size_t> sizes) {
    if (sizes.empty()) return partition_lengths(n, k, r, delta);
    std::sort(sizes.begin(), sizes.end());
    GroupPlan plan;
    plan.sizes = std::move(sizes);
    plan.r = r;
    plan.delta = delta;
    if (plan.covered_length() > n) throw std::invalid_argument("--sizes exceed n");
    plan.zero_columns = n - plan.covered_length();
    plan.validate(k);
    return plan;
}

void print_report_summary(const ConstructionReport& report) {
    std::printf("n: %zu\nk: %zu\nq: %llu\nr: %zu\ndelta: %zu\n", report.n, report.k,
                static_cast<unsigned long long>(report.q), report.r, report.delta);
    std::printf("group sizes:");
    for (size_t s : report.group_sizes) std::printf(" %zu", s);
    if (report.zero_columns > 0) std::printf(" (+%zu zero columns)", report.zero_columns);
    std::printf("\nd: %zu\nbound: %ld\nd_opt: %ld\noptimal: %s\nattempts: %u\nseed: %llu\n",
                report.achieved_distance, report.distance_bound, report.d_opt,
                report.optimal ? "yes" : "no", report.attempts,
                static_cast<unsigned long long>(report.seed));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"linear locally repairable codes: construction, transforms, verification"};
    app.require_subcommand(1);

    const uint64_t default_messages = env_u64("LRC_BUDGET_MESSAGES", 1ull << 24);
    const uint64_t default_subsets = env_u64("LRC_BUDGET_SUBSETS", 1ull << 22);

    std::function<void()> action;

    // ---- bound ------------------------------------------------------------
    struct {
        size_t n = 0, k = 0, r = 0, delta = 2;
        std::vector<size_t> sizes;
    } bound_args;
    {
        CLI::App* cmd = app.add_subcommand("bound", "print d_opt, the group plan, z and the construction bound");
        cmd->add_option("--n", bound_args.n, "code length")->required();
        cmd->add_option("--k", bound_args.k, "code dimension")->required();
        cmd->add_option("--r", bound_args.r, "locality")->required();
        cmd->add_option("--delta", bound_args.delta, "group erasure tolerance (delta >= 2)")->required();
        cmd->add_option("--sizes", bound_args.sizes, "explicit group sizes (default: computed)")->delimiter(',');
        cmd->callback([&]() {
            action = [&]() {
                const auto& a = bound_args;
                GroupPlan plan = plan_for(a.n, a.k, a.r, a.delta, a.sizes);
                ZStatistic z = compute_z(plan, a.k);
                std::printf("d_opt: %ld\n", d_opt(a.n, a.k, a.r, a.delta));
                std::printf("plan:");
                for (size_t s : plan.sizes) std::printf(" %zu", s);
                if (plan.zero_columns > 0) std::printf(" (+%zu zero columns)", plan.zero_columns);
                std::printf("\nz: %zu\nbound: %ld\n", z.z,
                            distance_bound(plan.covered_length(), a.k, a.delta, z.z));
            };
        });
    }

    // ---- construct-random / construct-greedy -------------------------------
    struct ConstructArgs {
        size_t n = 0, k = 0, r = 0, delta = 2;
        uint64_t q = 0;
        uint64_t seed = 0;
        unsigned retries = 32;
        uint64_t budget_messages;
        uint64_t budget_subsets;
        std::vector<size_t> sizes;
        std::string output;
    };
    auto add_construct = [&](const char* name, const char* help, ConstructArgs& args, bool greedy) {
        args.budget_messages = default_messages;
        args.budget_subsets = default_subsets;
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->add_option("--n", args.n, "code length")->required();
        cmd->add_option("--k", args.k, "code dimension")->required();
        cmd->add_option("--r", args.r, "locality")->required();
        cmd->add_option("--delta", args.delta, "group erasure tolerance")->required();
        cmd->add_option("--q", args.q, "field order (prime power)")->required();
        cmd->add_option("--seed", args.seed, "RNG seed");
        cmd->add_option("--retries", args.retries, "max construction attempts");
        cmd->add_option("--sizes", args.sizes, "explicit group sizes")->delimiter(',');
        cmd->add_option("--budget-messages", args.budget_messages, "distance enumeration cap (q^k)");
        cmd->add_option("--budget-subsets", args.budget_subsets, "subset enumeration cap");
        cmd->add_option("-o,--output", args.output, "output code file")->required();
        cmd->callback([&action, &args, greedy]() {
            action = [&args, greedy]() {
                if (greedy && !args.sizes.empty()) {
                    throw std::invalid_argument(
                        "construct-greedy derives its plan from (n,k,r,delta); --sizes applies to "
                        "construct-random");
                }
                FieldPtr field = field_from_order(args.q);
                GroupPlan plan = plan_for(args.n, args.k, args.r, args.delta, args.sizes);
                ConstructOptions options;
                options.seed = args.seed;
                options.max_retries = args.retries;
                options.distance.message_budget = args.budget_messages;
                options.selection_budget = args.budget_subsets;
                ConstructResult result =
                    greedy ? greedy_lrc(args.n, args.k, args.r, args.delta, field, options)
                           : random_lrc(args.n, args.k, plan, field, options);
                write_code_file(args.output, result.code, &result.structure);
                write_report_file(args.output + ".report.json", result.report);
                print_report_summary(result.report);
                std::printf("wrote %s and %s.report.json\n", args.output.c_str(),
                            args.output.c_str());
            };
        });
    };
    ConstructArgs random_args, greedy_args;
    add_construct("construct-random", "random-matrix construction with verify-and-retry", random_args,
                  false);
    add_construct("construct-greedy", "greedy construction with verified candidate selection",
                  greedy_args, true);

    // ---- verify ------------------------------------------------------------
    struct {
        std::string input;
        size_t r = 0, delta = 0;
        uint64_t budget_messages;
        uint64_t budget_subsets;
        unsigned workers = 1;
    } verify_args;
    verify_args.budget_messages = default_messages;
    verify_args.budget_subsets = default_subsets;
    {
        CLI::App* cmd = app.add_subcommand("verify", "print n, k, d, locality verdict, d_opt and gap");
        cmd->add_option("input", verify_args.input, "code file")->required();
        cmd->add_option("--r", verify_args.r, "check this locality instead of the file's");
        cmd->add_option("--delta", verify_args.delta, "delta for the locality check");
        cmd->add_option("--budget-messages", verify_args.budget_messages, "distance enumeration cap");
        cmd->add_option("--budget-subsets", verify_args.budget_subsets, "witness search cap");
        cmd->add_option("--workers", verify_args.workers, "distance enumeration threads");
        cmd->callback([&]() {
            action = [&]() {
                const auto& a = verify_args;
                CodeDocument doc = read_code_file(a.input);
                std::printf("n: %zu\nk: %zu\nq: %llu\n", doc.code.length(), doc.code.dimension(),
                            static_cast<unsigned long long>(doc.code.field()->order()));

                DistanceOptions dist;
                dist.message_budget = a.budget_messages;
                dist.workers = a.workers;
                bool have_d = false;
                size_t d = 0;
                try {
                    d = minimum_distance(doc.code, dist);
                    have_d = true;
                    std::printf("d: %zu\n", d);
                } catch (const BudgetExceeded&) {
                    std::printf("d: skipped (q^k above --budget-messages)\n");
                }

                size_t r = a.r, delta = a.delta;
                const bool explicit_params = r != 0 || delta != 0;
                if (!explicit_params && doc.locality.has_value()) {
                    r = doc.locality->r;
                    delta = doc.locality->delta;
                }
                if (r == 0 || delta == 0) {
                    std::printf("locality: not checked (no r/delta in file; pass --r and --delta)\n");
                    return;
                }
                LocalityOptions loc_options;
                loc_options.subset_budget = a.budget_subsets;
                const LocalityStructure* hint =
                    (!explicit_params && doc.locality.has_value()) ? &*doc.locality : nullptr;
                LocalityReport locality =
                    has_all_symbol_locality(doc.code, r, delta, hint, loc_options);
                std::printf("locality: (%zu,%zu) all-symbol %s%s\n", r, delta,
                            locality.ok ? "OK" : "FAILED",
                            hint != nullptr ? " (file groups)" : " (witness search)");
                if (!locality.ok) {
                    std::printf("locality failure: %s\n", locality.failure.c_str());
                    throw VerificationError("locality check failed");
                }
                if (have_d) {
                    const long bound = d_opt(doc.code.length(), doc.code.dimension(), r, delta);
                    const long gap = bound - static_cast<long>(d);
                    std::printf("d_opt: %ld\ngap: %ld (%s)\n", bound, gap,
                                gap == 0 ? "optimal"
                                         : (gap <= static_cast<long>(delta - 1) ? "almost optimal"
                                                                                : "suboptimal"));
                }
            };
        });
    }

    // ---- distance ------------------------------------------------------------
    struct {
        std::string input;
        uint64_t budget_messages;
        unsigned workers = 1;
    } distance_args;
    distance_args.budget_messages = default_messages;
    {
        CLI::App* cmd = app.add_subcommand("distance", "print the exact minimum distance");
        cmd->add_option("input", distance_args.input, "code file")->required();
        cmd->add_option("--budget-messages", distance_args.budget_messages, "distance enumeration cap");
        cmd->add_option("--workers", distance_args.workers, "distance enumeration threads");
        cmd->callback([&]() {
            action = [&]() {
                CodeDocument doc = read_code_file(distance_args.input);
                DistanceOptions dist;
                dist.message_budget = distance_args.budget_messages;
                dist.workers = distance_args.workers;
                std::printf("d: %zu\n", minimum_distance(doc.code, dist));
            };
        });
    }

    // ---- enlarge ------------------------------------------------------------
    struct {
        std::string input, output;
        size_t r = 0;
        uint64_t seed = 0;
        uint64_t budget_messages;
        uint64_t budget_subsets;
    } enlarge_args;
    enlarge_args.budget_messages = default_messages;
    enlarge_args.budget_subsets = default_subsets;
    {
        CLI::App* cmd = app.add_subcommand(
            "enlarge", "grow (n,k,d,r) to a verified (n+1,k+1,d,r+1) code (delta = 2)");
        cmd->add_option("input", enlarge_args.input, "code file")->required();
        cmd->add_option("-o,--output", enlarge_args.output, "output code file")->required();
        cmd->add_option("--r", enlarge_args.r, "input locality (default: from the file)");
        cmd->add_option("--seed", enlarge_args.seed, "RNG seed for sampled deep-hole search");
        cmd->add_option("--budget-messages", enlarge_args.budget_messages, "distance enumeration cap");
        cmd->add_option("--budget-subsets", enlarge_args.budget_subsets, "witness search cap");
        cmd->callback([&]() {
            action = [&]() {
                const auto& a = enlarge_args;
                CodeDocument doc = read_code_file(a.input);
                size_t r = a.r;
                if (r == 0) {
                    if (!doc.locality.has_value()) {
                        throw std::invalid_argument("no locality in the file; pass --r");
                    }
                    r = doc.locality->r;
                }
                EnlargeOptions options;
                options.seed = a.seed;
                options.distance.message_budget = a.budget_messages;
                options.locality.subset_budget = a.budget_subsets;
                options.deep_hole.message_budget = a.budget_messages;
                EnlargeResult result = enlarge(doc.code, r, options);
                write_code_file(a.output, result.code);
                std::printf("n: %zu\nk: %zu\nd: %zu\nr: %zu\nwrote %s\n", result.code.length(),
                            result.code.dimension(), result.distance, r + 1, a.output.c_str());
            };
        });
    }

    // ---- puncture ------------------------------------------------------------
    struct {
        std::string input, output;
        size_t coordinate = 0;
    } puncture_args;
    {
        CLI::App* cmd = app.add_subcommand("puncture", "shorten at a coordinate: (n,k,d) -> (n-1, >=k-1, >=d)");
        cmd->add_option("input", puncture_args.input, "code file")->required();
        cmd->add_option("-o,--output", puncture_args.output, "output code file")->required();
        cmd->add_option("--coord", puncture_args.coordinate, "coordinate to remove (default 0)");
        cmd->callback([&]() {
            action = [&]() {
                CodeDocument doc = read_code_file(puncture_args.input);
                LinearCode punctured = puncture(doc.code, puncture_args.coordinate);
                write_code_file(puncture_args.output, punctured);
                std::printf("n: %zu\nk: %zu\nwrote %s\n", punctured.length(), punctured.dimension(),
                            puncture_args.output.c_str());
            };
        });
    }

    // ---- experiment ------------------------------------------------------------
    struct {
        size_t n = 0, k = 0, r = 0, delta = 2;
        std::vector<uint64_t> q_list;
        unsigned trials = 200;
        uint64_t seed = 0;
        unsigned workers = 1;
        uint64_t budget_messages;
        std::vector<size_t> sizes;
        std::string output;
    } experiment_args;
    experiment_args.budget_messages = default_messages;
    {
        CLI::App* cmd = app.add_subcommand("experiment",
                                           "Monte Carlo success rates of the random construction");
        cmd->add_option("--n", experiment_args.n, "code length")->required();
        cmd->add_option("--k", experiment_args.k, "code dimension")->required();
        cmd->add_option("--r", experiment_args.r, "locality")->required();
        cmd->add_option("--delta", experiment_args.delta, "group erasure tolerance")->required();
        cmd->add_option("--q", experiment_args.q_list, "field orders, comma separated")
            ->required()
            ->delimiter(',');
        cmd->add_option("--trials", experiment_args.trials, "trials per field");
        cmd->add_option("--seed", experiment_args.seed, "RNG seed");
        cmd->add_option("--workers", experiment_args.workers, "worker threads");
        cmd->add_option("--sizes", experiment_args.sizes, "explicit group sizes")->delimiter(',');
        cmd->add_option("--budget-messages", experiment_args.budget_messages,
                        "distance enumeration cap per trial");
        cmd->add_option("-o,--output", experiment_args.output, "output CSV file")->required();
        cmd->callback([&]() {
            action = [&]() {
                const auto& a = experiment_args;
                GroupPlan plan = plan_for(a.n, a.k, a.r, a.delta, a.sizes);
                std::vector<FieldPtr> fields;
                for (uint64_t q : a.q_list) fields.push_back(field_from_order(q));
                ConstructOptions options;
                options.distance.message_budget = a.budget_messages;
                auto rows = monte_carlo(a.n, a.k, plan, fields, a.trials, a.seed, options, a.workers);
                const std::string csv = monte_carlo_csv(rows);
                write_text_file(a.output, csv);
                std::fputs(csv.c_str(), stdout);
                std::printf("wrote %s\n", a.output.c_str());
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        if (action) action();
        return kOk;
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "error (budget): %s\n", e.what());
        return kBudgetError;
    } catch (const RetriesExhausted& e) {
        std::fprintf(stderr, "error (retries): %s\n", e.what());
        return kRetriesError;
    } catch (const VerificationError& e) {
        std::fprintf(stderr, "error (verification): %s\n", e.what());
        return kVerificationError;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error (arguments): %s\n", e.what());
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error (arguments): %s\n", e.what());
        return kUsageError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kRuntimeError;
    }
}

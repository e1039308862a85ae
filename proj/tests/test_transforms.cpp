#include <doctest.h>

#include "lrc/construct.hpp"
#include "lrc/errors.hpp"
#include "lrc/rng.hpp"
#include "lrc/transforms.hpp"
#include "oracles.hpp"

using namespace lrc;

namespace {

size_t oracle_distance_to_code(const Matrix& g, const std::vector<uint32_t>& x) {
    const Field& f = *g.field();
    const uint64_t q = f.order();
    uint64_t count = 1;
    for (size_t i = 0; i < g.rows(); ++i) count *= q;
    size_t best = g.cols() + 1;
    std::vector<uint32_t> message(g.rows());
    for (uint64_t m = 0; m < count; ++m) {
        uint64_t t = m;
        for (size_t i = 0; i < g.rows(); ++i) {
            message[i] = static_cast<uint32_t>(t % q);
            t /= q;
        }
        size_t dist = 0;
        for (size_t j = 0; j < g.cols(); ++j) {
            uint32_t acc = 0;
            for (size_t i = 0; i < g.rows(); ++i) acc = f.add(acc, f.mul(message[i], g.raw(i, j)));
            dist += (acc != x[j]);
        }
        best = std::min(best, dist);
    }
    return best;
}

}  // namespace

TEST_CASE("deep hole: full space has none") {
    auto f2 = Field::make(2, 1);
    LinearCode full(Matrix::identity(f2, 3));
    DeepHoleOptions opts;
    opts.strategy = DeepHoleStrategy::Exhaustive;
    CHECK_THROWS_AS(find_deep_hole(full, 1, opts), RetriesExhausted);
}

TEST_CASE("deep hole of the zero code is the all-ones vector") {
    auto f2 = Field::make(2, 1);
    Matrix zero_code(f2, 0, 3);
    DeepHoleOptions opts;
    opts.strategy = DeepHoleStrategy::Exhaustive;
    CHECK(find_deep_hole(zero_code, 3, opts) == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("deep hole for the GF(3) replication code") {
    auto f3 = Field::make(3, 1);
    Matrix g = Matrix::from_rows(f3, {{1, 1, 0, 0}, {0, 0, 1, 1}});
    DeepHoleOptions opts;
    opts.strategy = DeepHoleStrategy::Exhaustive;
    auto x = find_deep_hole(g, 2, opts);
    CHECK(oracle_distance_to_code(g, x) >= 2);
    CHECK(distance_to_code(g, x) == oracle_distance_to_code(g, x));
    // the spec's hand-worked witness is itself valid
    CHECK(oracle_distance_to_code(g, {0, 1, 0, 1}) >= 2);
}

TEST_CASE("sampled deep hole search") {
    auto f5 = Field::make(5, 1);
    Matrix g = Matrix::from_rows(f5, {{1, 1, 1, 1, 0}, {0, 1, 2, 3, 4}});
    DeepHoleOptions opts;
    opts.strategy = DeepHoleStrategy::Sampled;
    opts.seed = 17;
    auto x = find_deep_hole(g, 2, opts);
    CHECK(distance_to_code(g, x) >= 2);

    opts.max_attempts = 3;
    CHECK_THROWS_AS(find_deep_hole(g, 5, opts), RetriesExhausted);
}

TEST_CASE("counting inequality implies exhaustive success") {
    Rng rng(55);
    int gate_hits = 0;
    for (int iter = 0; iter < 25; ++iter) {
        const uint64_t q = (iter % 2 == 0) ? 2 : 3;
        auto field = Field::make(q, 1);
        const size_t k = 1 + rng.below(3);
        const size_t n = k + 1 + rng.below(5);
        Matrix m(field, k, n);
        do {
            for (size_t i = 0; i < k; ++i) {
                for (size_t j = 0; j < n; ++j) m.set_raw(i, j, static_cast<uint32_t>(rng.below(q)));
            }
        } while (m.rank() != k);

        for (size_t d = 1; d <= n; ++d) {
            DeepHoleOptions opts;
            opts.strategy = DeepHoleStrategy::Exhaustive;
            if (counting_inequality_holds(q, n, k, d)) {
                ++gate_hits;
                std::vector<uint32_t> x;
                REQUIRE_NOTHROW(x = find_deep_hole(m, d, opts));
                CHECK(distance_to_code(m, x) >= d);
            }
        }
    }
    CHECK(gate_hits > 0);
}

TEST_CASE("enlarge the GF(3) replication code") {
    auto f3 = Field::make(3, 1);
    LinearCode rep(Matrix::from_rows(f3, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    EnlargeOptions opts;
    opts.seed = 1;
    auto result = enlarge(rep, 1, opts);
    CHECK(result.code.length() == 5);
    CHECK(result.code.dimension() == 3);
    CHECK(result.distance == 2);
    CHECK(minimum_distance(result.code) == 2);
    CHECK(result.locality.ok);
    CHECK(has_all_symbol_locality(result.code, 2, 2).ok);

    CHECK_THROWS_AS(enlarge(rep, 2, opts), std::invalid_argument);  // r = k
    // identity code has no (1,2)-locality, so the precondition trips
    LinearCode identity(Matrix::identity(f3, 3));
    CHECK_THROWS_AS(enlarge(identity, 1, opts), std::invalid_argument);
}

TEST_CASE("puncture pinned example") {
    auto f2 = Field::make(2, 1);
    LinearCode rep(Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    LinearCode punctured = puncture(rep, 0);
    CHECK(punctured.generator() == Matrix::from_rows(f2, {{0, 1, 1}}));
    CHECK(punctured.dimension() == 1);
    CHECK(minimum_distance(punctured) == 2);
}

TEST_CASE("puncturing a zero column keeps k and d") {
    auto f2 = Field::make(2, 1);
    LinearCode code(Matrix::from_rows(f2, {{1, 0, 0}, {0, 1, 0}}));
    LinearCode punctured = puncture(code, 2);
    CHECK(punctured.dimension() == 2);
    CHECK(punctured.length() == 2);
    CHECK(minimum_distance(punctured) == minimum_distance(code));
}

TEST_CASE("puncture error paths") {
    auto f2 = Field::make(2, 1);
    LinearCode tiny(Matrix::from_rows(f2, {{1, 1}}));
    CHECK_THROWS_AS(puncture(tiny, 0), std::invalid_argument);  // would collapse to k = 0
    LinearCode rep(Matrix::from_rows(f2, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    CHECK_THROWS_AS(puncture(rep, 4), std::out_of_range);
}

TEST_CASE("puncture contract on constructed codes") {
    auto f13 = Field::make(13, 1);
    ConstructOptions opts;
    opts.seed = 5;
    auto built = random_lrc(8, 4, partition_lengths(8, 4, 3, 2), f13, opts);
    const size_t d = minimum_distance(built.code);

    for (size_t coord : {size_t{0}, size_t{5}}) {
        LinearCode punctured = puncture(built.code, coord);
        CHECK(punctured.length() == 7);
        CHECK(punctured.dimension() >= 3);
        CHECK(minimum_distance(punctured) >= d);
        CHECK(has_all_symbol_locality(punctured, 3, 2).ok);
    }
}

TEST_CASE("puncturing the appended coordinate undoes enlarge on parameters") {
    auto f3 = Field::make(3, 1);
    LinearCode rep(Matrix::from_rows(f3, {{1, 1, 0, 0}, {0, 0, 1, 1}}));
    EnlargeOptions opts;
    opts.seed = 2;
    auto enlarged = enlarge(rep, 1, opts);
    LinearCode back = puncture(enlarged.code, enlarged.code.length() - 1);
    CHECK(back.length() == rep.length());
    CHECK(back.dimension() >= rep.dimension());
    CHECK(minimum_distance(back) >= minimum_distance(rep));
}

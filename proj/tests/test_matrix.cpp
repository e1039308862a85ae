#include <doctest.h>

#include "lrc/errors.hpp"
#include "lrc/matrix.hpp"
#include "lrc/rng.hpp"

using namespace lrc;

namespace {

Matrix random_matrix(const FieldPtr& field, size_t rows, size_t cols, Rng& rng) {
    Matrix m(field, rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) {
            m.set_raw(i, j, static_cast<uint32_t>(rng.below(field->order())));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    auto f2 = Field::make(2, 1);
    CHECK(Matrix::identity(f2, 3).rank() == 3);
    CHECK(Matrix(f2, 2, 4).rank() == 0);

    auto f7 = Field::make(7, 1);
    CHECK(Matrix::from_rows(f7, {{1, 2}, {2, 4}}).rank() == 1);  // second row = 2 * first
}

TEST_CASE("rref") {
    auto f7 = Field::make(7, 1);

    auto id = Matrix::identity(f7, 3).rref();
    CHECK(id.matrix == Matrix::identity(f7, 3));
    CHECK(id.pivots == std::vector<size_t>{0, 1, 2});

    Matrix zero(f7, 2, 2);
    auto z = zero.rref();
    CHECK(z.matrix == zero);
    CHECK(z.pivots.empty());

    auto r = Matrix::from_rows(f7, {{2, 4}, {1, 2}}).rref();
    CHECK(r.matrix == Matrix::from_rows(f7, {{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<size_t>{0});
}

TEST_CASE("matmul") {
    auto f5 = Field::make(5, 1);
    Rng rng(3);
    Matrix a = random_matrix(f5, 3, 4, rng);
    CHECK(a * Matrix::identity(f5, 4) == a);
    CHECK(a * Matrix(f5, 4, 2) == Matrix(f5, 3, 2));

    // (X)(I_t | B): the first t product columns are X's columns
    Matrix x = random_matrix(f5, 4, 2, rng);
    Matrix b = Matrix::from_rows(f5, {{1}, {2}});
    Matrix itb = Matrix::identity(f5, 2).hconcat(b);
    Matrix prod = x * itb;
    CHECK(prod.columns({0, 1}) == x);

    CHECK_THROWS_AS(a * Matrix(f5, 3, 2), std::invalid_argument);
    auto f7 = Field::make(7, 1);
    CHECK_THROWS_AS(a * Matrix(f7, 4, 2), std::invalid_argument);
}

TEST_CASE("submatrix") {
    auto f7 = Field::make(7, 1);
    Matrix m = Matrix::from_rows(f7, {{1, 2, 3}, {4, 5, 6}});
    CHECK(m.submatrix({0, 1}, {0, 1, 2}) == m);
    CHECK(m.submatrix({1}, {2}) == Matrix::from_rows(f7, {{6}}));
    // row-then-column selection composes
    CHECK(m.submatrix({1}, {0, 1, 2}).submatrix({0}, {2}) == m.submatrix({1}, {2}));

    CHECK_THROWS_AS(m.submatrix({0, 2}, {0}), std::out_of_range);
    CHECK_THROWS_AS(m.submatrix({0, 0}, {1}), std::invalid_argument);
}

TEST_CASE("all_square_submatrices_invertible") {
    auto f7 = Field::make(7, 1);
    CHECK(all_square_submatrices_invertible(Matrix::from_rows(f7, {{4, 5}, {5, 2}})));
    CHECK_FALSE(all_square_submatrices_invertible(Matrix::from_rows(f7, {{4, 0}, {5, 2}})));
    CHECK_FALSE(all_square_submatrices_invertible(Matrix::from_rows(f7, {{1, 1}, {1, 1}})));

    auto f2 = Field::make(2, 1);
    CHECK(all_square_submatrices_invertible(Matrix::from_rows(f2, {{1}})));

    CHECK_THROWS_AS(all_square_submatrices_invertible(Matrix::identity(f2, 30), 100), BudgetExceeded);
}

TEST_CASE("cauchy_matrix pinned values") {
    auto f7 = Field::make(7, 1);
    CHECK(cauchy_matrix(f7, 2, 2) == Matrix::from_rows(f7, {{4, 5}, {5, 2}}));

    auto f2 = Field::make(2, 1);
    CHECK(cauchy_matrix(f2, 1, 1) == Matrix::from_rows(f2, {{1}}));

    auto f4 = Field::make(2, 2);
    Matrix c = cauchy_matrix(f4, 2, 1);
    CHECK(c.raw(0, 0) != 0);
    CHECK(c.raw(1, 0) != 0);
    CHECK(all_square_submatrices_invertible(c));

    CHECK_THROWS_AS(cauchy_matrix(f2, 3, 1), std::invalid_argument);
}

TEST_CASE("cauchy matrices have all minors invertible") {
    for (uint64_t q : {5, 7, 13}) {
        auto field = Field::make(q, 1);
        for (size_t t = 1; t <= 4; ++t) {
            for (size_t c = 1; c <= 3; ++c) {
                Matrix m = [&]() -> Matrix {
                    try {
                        return cauchy_matrix(field, t, c);
                    } catch (const std::invalid_argument&) {
                        return Matrix(field, 1, 1);  // too few usable points; skip
                    }
                }();
                if (m.rows() == t && m.cols() == c) {
                    CHECK(all_square_submatrices_invertible(m));
                }
            }
        }
    }
}

TEST_CASE("rank agrees with rref pivot count on random matrices") {
    Rng rng(7);
    for (uint64_t q : {2, 3, 5}) {
        auto field = Field::make(q, 1);
        for (int iter = 0; iter < 30; ++iter) {
            const size_t rows = 1 + rng.below(5);
            const size_t cols = 1 + rng.below(5);
            Matrix m = random_matrix(field, rows, cols, rng);
            auto rr = m.rref();
            CHECK(m.rank() == rr.pivots.size());
            CHECK(rr.matrix.rank() == rr.pivots.size());

            Matrix b = random_matrix(field, cols, 1 + rng.below(4), rng);
            CHECK((m * b).rank() <= std::min(m.rank(), b.rank()));
        }
    }
}

TEST_CASE("any t columns of X(I_t|B) span the group's column space") {
    Rng rng(11);
    auto field = Field::make(13, 1);
    for (int iter = 0; iter < 20; ++iter) {
        const size_t t = 2 + rng.below(3);
        const size_t c = 1 + rng.below(2);
        const size_t k = t + 1 + rng.below(3);
        Matrix x(field, k, t);
        do {
            x = random_matrix(field, k, t, rng);
        } while (x.rank() != t);
        Matrix b = cauchy_matrix(field, t, c);
        Matrix group = x * Matrix::identity(field, t).hconcat(b);
        REQUIRE(group.cols() == t + c);

        std::vector<size_t> sel(t);
        for (size_t i = 0; i < t; ++i) sel[i] = i;
        bool more = true;
        while (more) {
            CHECK(rank_of_columns(group, sel) == t);
            more = false;
            for (size_t i = t; i-- > 0;) {
                if (sel[i] < group.cols() - (t - i)) {
                    ++sel[i];
                    for (size_t j = i + 1; j < t; ++j) sel[j] = sel[j - 1] + 1;
                    more = true;
                    break;
                }
            }
        }
    }
}

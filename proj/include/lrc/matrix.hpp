#ifndef LRC_MATRIX_HPP
#define LRC_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "lrc/field.hpp"

namespace lrc {

// Dense matrix over a finite field. Entries are stored row-major as packed
// field values; all mutating operations return new matrices (value
// semantics), so instances can be shared freely between threads.
class Matrix {
  public:
    Matrix(FieldPtr field, size_t rows, size_t cols);  // zero-filled; rows == 0 allowed
    static Matrix identity(FieldPtr field, size_t n);
    static Matrix from_rows(FieldPtr field, const std::vector<std::vector<uint32_t>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    uint32_t raw(size_t r, size_t c) const { return data_[r * cols_ + c]; }
    void set_raw(size_t r, size_t c, uint32_t v) { data_[r * cols_ + c] = v; }
    FieldElement at(size_t r, size_t c) const { return FieldElement(field_, raw(r, c)); }
    void set(size_t r, size_t c, const FieldElement& v);

    const uint32_t* row_data(size_t r) const { return data_.data() + r * cols_; }

    Matrix operator*(const Matrix& other) const;
    bool operator==(const Matrix& other) const;

    // Entries at the given row/column index sets, in the given order.
    // Indices must be in range and duplicate-free.
    Matrix submatrix(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const;
    Matrix columns(const std::vector<size_t>& col_idx) const;

    Matrix hconcat(const Matrix& right) const;
    Matrix vconcat(const Matrix& below) const;

    size_t rank() const;

    struct Rref;
    Rref rref() const;

  private:
    FieldPtr field_;
    size_t rows_;
    size_t cols_;
    std::vector<uint32_t> data_;
};

struct Matrix::Rref {
    Matrix matrix;
    std::vector<size_t> pivots;
};

// Rank of the submatrix formed by the selected columns (all rows).
size_t rank_of_columns(const Matrix& m, const std::vector<size_t>& col_idx);

// True iff every square submatrix, over all sizes and index choices, is
// invertible. Exhaustive; rejects inputs whose submatrix count exceeds
// work_limit rather than sampling.
bool all_square_submatrices_invertible(const Matrix& m, uint64_t work_limit = 1'000'000);

// t x c matrix with entries 1/(x_i + y_j) over deterministically chosen
// points: the x_i are the first t field elements in enumeration order, the
// y_j the following elements, skipping any y with x_i + y = 0. Every square
// submatrix of the result is invertible. Throws when the field runs out of
// usable elements.
Matrix cauchy_matrix(const FieldPtr& field, size_t t, size_t c);

}  // namespace lrc

#endif

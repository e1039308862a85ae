#include "lrc/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lrc/errors.hpp"

namespace lrc {

namespace {

void check_indices(const std::vector<size_t>& idx, size_t limit, const char* what) {
    std::vector<size_t> sorted = idx;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= limit) throw std::out_of_range(std::string(what) + " index out of range");
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw std::invalid_argument(std::string(what) + " indices contain a duplicate");
        }
    }
}

// Forward elimination on a scratch copy; returns the pivot count. The
// scratch layout is row-major with the given column count.
size_t eliminate(const Field& f, std::vector<uint32_t>& a, size_t rows, size_t cols) {
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && a[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pivot_row) {
            for (size_t j = col; j < cols; ++j) std::swap(a[sel * cols + j], a[pivot_row * cols + j]);
        }
        const uint32_t pivot_inv = f.inv(a[pivot_row * cols + col]);
        for (size_t i = pivot_row + 1; i < rows; ++i) {
            const uint32_t factor = a[i * cols + col];
            if (factor == 0) continue;
            const uint32_t scale = f.mul(factor, pivot_inv);
            for (size_t j = col; j < cols; ++j) {
                a[i * cols + j] = f.sub(a[i * cols + j], f.mul(scale, a[pivot_row * cols + j]));
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

uint64_t binomial_u64(size_t n, size_t k, uint64_t cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

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

}  // namespace

Matrix::Matrix(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (cols == 0) throw std::invalid_argument("matrix must have at least one column");
}

Matrix Matrix::identity(FieldPtr field, size_t n) {
    Matrix m(std::move(field), n, n);
    for (size_t i = 0; i < n; ++i) m.set_raw(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(FieldPtr field, const std::vector<std::vector<uint32_t>>& rows) {
    if (rows.empty()) throw std::invalid_argument("from_rows needs at least one row");
    const size_t cols = rows[0].size();
    Matrix m(field, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < cols; ++j) {
            if (rows[i][j] >= field->order()) throw std::invalid_argument("entry out of field range");
            m.set_raw(i, j, rows[i][j]);
        }
    }
    return m;
}

void Matrix::set(size_t r, size_t c, const FieldElement& v) {
    if (!field_->same_as(*v.field())) throw std::invalid_argument("entry from a different field");
    set_raw(r, c, v.value());
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (!field_->same_as(*other.field_)) throw std::invalid_argument("matrix product across different fields");
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    const Field& f = *field_;
    Matrix out(field_, rows_, other.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t l = 0; l < cols_; ++l) {
            const uint32_t a = raw(i, l);
            if (a == 0) continue;
            for (size_t j = 0; j < other.cols_; ++j) {
                const uint32_t b = other.raw(l, j);
                if (b == 0) continue;
                out.set_raw(i, j, f.add(out.raw(i, j), f.mul(a, b)));
            }
        }
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_->same_as(*other.field_) && rows_ == other.rows_ && cols_ == other.cols_ &&
           data_ == other.data_;
}

Matrix Matrix::submatrix(const std::vector<size_t>& row_idx, const std::vector<size_t>& col_idx) const {
    check_indices(row_idx, rows_, "row");
    check_indices(col_idx, cols_, "column");
    if (col_idx.empty()) throw std::invalid_argument("submatrix needs at least one column");
    Matrix out(field_, row_idx.size(), col_idx.size());
    for (size_t i = 0; i < row_idx.size(); ++i) {
        for (size_t j = 0; j < col_idx.size(); ++j) {
            out.set_raw(i, j, raw(row_idx[i], col_idx[j]));
        }
    }
    return out;
}

Matrix Matrix::columns(const std::vector<size_t>& col_idx) const {
    std::vector<size_t> all_rows(rows_);
    for (size_t i = 0; i < rows_; ++i) all_rows[i] = i;
    return submatrix(all_rows, col_idx);
}

Matrix Matrix::hconcat(const Matrix& right) const {
    if (!field_->same_as(*right.field_) || rows_ != right.rows_) {
        throw std::invalid_argument("hconcat shape or field mismatch");
    }
    Matrix out(field_, rows_, cols_ + right.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.set_raw(i, j, raw(i, j));
        for (size_t j = 0; j < right.cols_; ++j) out.set_raw(i, cols_ + j, right.raw(i, j));
    }
    return out;
}

Matrix Matrix::vconcat(const Matrix& below) const {
    if (!field_->same_as(*below.field_) || cols_ != below.cols_) {
        throw std::invalid_argument("vconcat shape or field mismatch");
    }
    Matrix out(field_, rows_ + below.rows_, cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.set_raw(i, j, raw(i, j));
    }
    for (size_t i = 0; i < below.rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out.set_raw(rows_ + i, j, below.raw(i, j));
    }
    return out;
}

size_t Matrix::rank() const {
    std::vector<uint32_t> scratch = data_;
    return eliminate(*field_, scratch, rows_, cols_);
}

Matrix::Rref Matrix::rref() const {
    const Field& f = *field_;
    Matrix out = *this;
    std::vector<size_t> pivots;
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
        size_t sel = pivot_row;
        while (sel < rows_ && out.raw(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != pivot_row) {
            for (size_t j = 0; j < cols_; ++j) {
                const uint32_t tmp = out.raw(sel, j);
                out.set_raw(sel, j, out.raw(pivot_row, j));
                out.set_raw(pivot_row, j, tmp);
            }
        }
        const uint32_t scale = f.inv(out.raw(pivot_row, col));
        for (size_t j = 0; j < cols_; ++j) out.set_raw(pivot_row, j, f.mul(scale, out.raw(pivot_row, j)));
        for (size_t i = 0; i < rows_; ++i) {
            if (i == pivot_row) continue;
            const uint32_t factor = out.raw(i, col);
            if (factor == 0) continue;
            for (size_t j = 0; j < cols_; ++j) {
                out.set_raw(i, j, f.sub(out.raw(i, j), f.mul(factor, out.raw(pivot_row, j))));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    return {std::move(out), std::move(pivots)};
}

size_t rank_of_columns(const Matrix& m, const std::vector<size_t>& col_idx) {
    if (col_idx.empty()) return 0;
    const size_t rows = m.rows();
    const size_t cols = col_idx.size();
    std::vector<uint32_t> scratch(rows * cols);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) scratch[i * cols + j] = m.raw(i, col_idx[j]);
    }
    return eliminate(*m.field(), scratch, rows, cols);
}

bool all_square_submatrices_invertible(const Matrix& m, uint64_t work_limit) {
    const size_t max_size = std::min(m.rows(), m.cols());
    uint64_t total = 0;
    for (size_t l = 1; l <= max_size; ++l) {
        const uint64_t count =
            binomial_u64(m.rows(), l, work_limit) * binomial_u64(m.cols(), l, work_limit);
        total += count;
        if (total > work_limit) {
            throw BudgetExceeded("square submatrix enumeration exceeds the work limit");
        }
    }
    for (size_t l = 1; l <= max_size; ++l) {
        std::vector<size_t> rows_sel(l);
        for (size_t i = 0; i < l; ++i) rows_sel[i] = i;
        do {
            std::vector<size_t> cols_sel(l);
            for (size_t i = 0; i < l; ++i) cols_sel[i] = i;
            do {
                if (m.submatrix(rows_sel, cols_sel).rank() < l) return false;
            } while (next_combination(cols_sel, m.cols()));
        } while (next_combination(rows_sel, m.rows()));
    }
    return true;
}

Matrix cauchy_matrix(const FieldPtr& field, size_t t, size_t c) {
    if (t == 0 || c == 0) throw std::invalid_argument("cauchy_matrix needs positive dimensions");
    if (field->order() < t + c) {
        throw std::invalid_argument("field too small for a " + std::to_string(t) + "x" + std::to_string(c) +
                                    " Cauchy matrix");
    }
    const Field& f = *field;
    std::vector<uint32_t> xs(t);
    for (size_t i = 0; i < t; ++i) xs[i] = static_cast<uint32_t>(i);
    std::vector<uint32_t> ys;
    for (uint64_t v = t; v < field->order() && ys.size() < c; ++v) {
        bool usable = true;
        for (uint32_t x : xs) {
            if (f.add(x, static_cast<uint32_t>(v)) == 0) {
                usable = false;
                break;
            }
        }
        if (usable) ys.push_back(static_cast<uint32_t>(v));
    }
    if (ys.size() < c) {
        throw std::invalid_argument("field too small: not enough usable Cauchy points");
    }
    Matrix out(field, t, c);
    for (size_t i = 0; i < t; ++i) {
        for (size_t j = 0; j < c; ++j) out.set_raw(i, j, f.inv(f.add(xs[i], ys[j])));
    }
    return out;
}

}  // namespace lrc

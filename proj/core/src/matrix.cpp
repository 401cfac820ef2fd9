#include "arq/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace arq {

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::zero(const Field& f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }

Matrix Matrix::from_int_rows(const Field& f, const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_int_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of_int(f, rows[i][j]);
    }
    return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries, const Field& f) {
    Matrix m(f, entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
    return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

Scalar& Matrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    return data_[i * cols_ + j];
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& x : m.data_) x *= c;
    return m;
}

Matrix Matrix::operator-() const { return scaled(-Scalar::one(field_)); }

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix add: shape mismatch");
    Matrix m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix mul: shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::col(std::size_t j) const {
    Matrix v(field_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) v.at(i, 0) = at(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, const Matrix& v) {
    if (v.rows() != rows_ || v.cols() != 1) throw std::invalid_argument("set_col: shape mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v.at(i, 0);
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
    }
    os << "]";
    return os.str();
}

RrefResult rref(const Matrix& a) {
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = m.rows();
        for (std::size_t i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        Scalar inv = m.at(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return RrefResult{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

Matrix kernel_basis(const Matrix& a) {
    RrefResult r = rref(a);
    const Field& f = a.field();
    std::vector<std::size_t> free_cols;
    {
        std::size_t p = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (p < r.pivot_cols.size() && r.pivot_cols[p] == j)
                ++p;
            else
                free_cols.push_back(j);
        }
    }
    Matrix k(f, a.cols(), free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        std::size_t fc = free_cols[t];
        k.at(fc, t) = Scalar::one(f);
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            k.at(r.pivot_cols[p], t) = -r.reduced.at(p, fc);
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    RrefResult r = rref(hstack(a, b));
    for (std::size_t p : r.pivot_cols)
        if (p >= a.cols()) return std::nullopt;
    Matrix x = Matrix::zero(a.field(), a.cols(), b.cols());
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(r.pivot_cols[k], j) = r.reduced.at(k, a.cols() + j);
    return x;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    paste(m, 0, 0, a);
    paste(m, 0, a.cols(), b);
    return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    paste(m, 0, 0, a);
    paste(m, a.rows(), 0, b);
    return m;
}

Matrix take_cols(const Matrix& a, const std::vector<std::size_t>& idx) {
    Matrix m(a.field(), a.rows(), idx.size());
    for (std::size_t t = 0; t < idx.size(); ++t)
        for (std::size_t i = 0; i < a.rows(); ++i) m.at(i, t) = a.at(i, idx[t]);
    return m;
}

void paste(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src) {
    if (r0 + src.rows() > dst.rows() || c0 + src.cols() > dst.cols())
        throw std::invalid_argument("paste: out of range");
    for (std::size_t i = 0; i < src.rows(); ++i)
        for (std::size_t j = 0; j < src.cols(); ++j) dst.at(r0 + i, c0 + j) = src.at(i, j);
}

}  // namespace arq

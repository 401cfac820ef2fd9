#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "arq/field.hpp"

namespace arq {

// Dense matrix over an exact field.  Column vectors are n-by-1 matrices.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols);

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix zero(const Field& f, std::size_t rows, std::size_t cols);
    static Matrix from_int_rows(const Field& f, const std::vector<std::vector<long>>& rows);
    static Matrix column(const std::vector<Scalar>& entries, const Field& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    Scalar& at(std::size_t i, std::size_t j);

    Matrix transpose() const;
    Matrix scaled(const Scalar& c) const;
    Matrix operator-() const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const;
    Matrix col(std::size_t j) const;
    void set_col(std::size_t j, const Matrix& v);

    std::string str() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);

// Columns form a basis of the null space of a.
Matrix kernel_basis(const Matrix& a);

// Solves a x = b columnwise; empty when any column is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix take_cols(const Matrix& a, const std::vector<std::size_t>& idx);
void paste(Matrix& dst, std::size_t r0, std::size_t c0, const Matrix& src);

}  // namespace arq

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "arq/matrix.hpp"

using arq::Field;
using arq::Matrix;
using arq::Scalar;

namespace {

constexpr int kFuzzIterations = 200;

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937& rng) {
    std::uniform_int_distribution<long> dist(-4, 4);
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar::of_int(f, dist(rng));
    return m;
}

// Laplace-expansion determinant, independent of the elimination code path.
Scalar minor_det(const Matrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    const Field f = a.field();
    if (rows.empty()) return Scalar::one(f);
    Scalar acc = Scalar::zero(f);
    Scalar sign = Scalar::one(f);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        std::vector<std::size_t> sub_cols;
        for (std::size_t t = 0; t < cols.size(); ++t)
            if (t != k) sub_cols.push_back(cols[t]);
        const Scalar& entry = a.at(rows[0], cols[k]);
        if (!entry.is_zero()) acc += sign * entry * minor_det(a, sub_rows, sub_cols);
        sign = -sign;
    }
    return acc;
}

bool has_nonzero_minor(const Matrix& a, std::size_t k) {
    std::vector<std::size_t> rows(k), cols(k);
    std::vector<std::size_t> row_sel, col_sel;
    bool found = false;
    auto choose = [&](auto&& self, std::size_t need, std::size_t start, std::size_t limit,
                      std::vector<std::size_t>& out, auto&& cont) -> void {
        if (found) return;
        if (need == 0) {
            cont();
            return;
        }
        for (std::size_t i = start; i + need <= limit + 1 && i < limit; ++i) {
            out.push_back(i);
            self(self, need - 1, i + 1, limit, out, cont);
            out.pop_back();
        }
    };
    choose(choose, k, 0, a.rows(), row_sel, [&] {
        choose(choose, k, 0, a.cols(), col_sel, [&] {
            if (!found && !minor_det(a, row_sel, col_sel).is_zero()) found = true;
        });
    });
    return found;
}

// Rank as the size of the largest nonvanishing minor.
std::size_t minor_rank(const Matrix& a) {
    std::size_t top = std::min(a.rows(), a.cols());
    for (std::size_t k = top; k > 0; --k)
        if (has_nonzero_minor(a, k)) return k;
    return 0;
}

}  // namespace

TEST_CASE("rref of a rank-one integer matrix") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_int_rows(q, {{1, 2}, {2, 4}});
    auto r = arq::rref(a);
    CHECK(r.rank() == 1);
    REQUIRE(r.pivot_cols.size() == 1);
    CHECK(r.pivot_cols[0] == 0);
    CHECK(r.reduced.at(0, 0) == Scalar::one(q));
    CHECK(r.reduced.at(0, 1) == Scalar::of_int(q, 2));
    CHECK(r.reduced.at(1, 0).is_zero());
    CHECK(r.reduced.at(1, 1).is_zero());
}

TEST_CASE("rref of the identity") {
    Field q = Field::rationals();
    for (std::size_t n : {1u, 2u, 5u}) {
        auto r = arq::rref(Matrix::identity(q, n));
        CHECK(r.rank() == n);
        for (std::size_t j = 0; j < n; ++j) CHECK(r.pivot_cols[j] == j);
        CHECK(r.reduced == Matrix::identity(q, n));
    }
}

TEST_CASE("kernel of a rank-one matrix") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_int_rows(q, {{1, 2}, {2, 4}});
    Matrix k = arq::kernel_basis(a);
    REQUIRE(k.cols() == 1);
    REQUIRE(k.rows() == 2);
    CHECK((a * k).is_zero());
    // Spans the same line as (2, -1).
    Scalar ratio = k.at(0, 0) / k.at(1, 0);
    CHECK(ratio == Scalar::of_int(q, -2));
}

TEST_CASE("solve returns empty for inconsistent systems") {
    Field q = Field::rationals();
    Matrix a = Matrix::from_int_rows(q, {{1, 2}, {2, 4}});
    Matrix b = Matrix::from_int_rows(q, {{1}, {3}});
    CHECK(!arq::solve(a, b).has_value());
    Matrix b2 = Matrix::from_int_rows(q, {{1}, {2}});
    auto x = arq::solve(a, b2);
    REQUIRE(x.has_value());
    CHECK(a * *x == b2);
}

TEST_CASE("rank over a prime field can drop") {
    Matrix a2 = Matrix::from_int_rows(Field::prime_field(2), {{2}});
    CHECK(arq::rank(a2) == 0);
    Matrix a3 = Matrix::from_int_rows(Field::prime_field(3), {{2}});
    CHECK(arq::rank(a3) == 1);
    Matrix aq = Matrix::from_int_rows(Field::rationals(), {{2}});
    CHECK(arq::rank(aq) == 1);
}

TEST_CASE("empty shapes are handled") {
    Field q = Field::rationals();
    Matrix a(q, 0, 3);
    CHECK(arq::rank(a) == 0);
    CHECK(arq::kernel_basis(a) == Matrix::identity(q, 3));
    Matrix b(q, 3, 0);
    CHECK(arq::rank(b) == 0);
    CHECK(arq::kernel_basis(b).cols() == 0);
    auto x = arq::solve(b, Matrix::zero(q, 3, 1));
    REQUIRE(x.has_value());
    CHECK(x->rows() == 0);
}

TEST_CASE("rank agrees with the minor-expansion oracle") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<std::size_t> dim(0, 5);
    for (int it = 0; it < kFuzzIterations; ++it) {
        Field f = (it % 3 == 0) ? Field::prime_field(5) : Field::rationals();
        Matrix a = random_matrix(f, dim(rng), dim(rng), rng);
        CHECK(arq::rank(a) == minor_rank(a));
    }
}

TEST_CASE("rank properties under fuzz") {
    std::mt19937 rng(987654);
    std::uniform_int_distribution<std::size_t> dim(0, 7);
    for (int it = 0; it < kFuzzIterations; ++it) {
        Field f = (it % 4 == 0) ? Field::prime_field(7) : Field::rationals();
        Matrix a = random_matrix(f, dim(rng), dim(rng), rng);
        auto r = arq::rref(a);
        // rank(A) = rank(A^T)
        CHECK(r.rank() == arq::rank(a.transpose()));
        // rank + nullity = number of columns
        Matrix k = arq::kernel_basis(a);
        CHECK(r.rank() + k.cols() == a.cols());
        CHECK((a * k).is_zero());
        // rref is idempotent
        auto r2 = arq::rref(r.reduced);
        CHECK(r2.reduced == r.reduced);
        CHECK(r2.pivot_cols == r.pivot_cols);
        // solving A x = A c recovers a valid solution
        if (a.cols() > 0) {
            Matrix c = random_matrix(f, a.cols(), 1, rng);
            Matrix b = a * c;
            auto x = arq::solve(a, b);
            REQUIRE(x.has_value());
            CHECK(a * *x == b);
        }
    }
}

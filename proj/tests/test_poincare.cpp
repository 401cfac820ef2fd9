#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "arq/constructions.hpp"
#include "arq/homology.hpp"
#include "arq/models.hpp"
#include "arq/poincare.hpp"
#include "arq/resolution.hpp"
#include "helpers.hpp"

using namespace arq;
using arqtest::Rng;

namespace {

Matrix entry(const Field& f, const std::vector<std::vector<long>>& rows) {
    return Matrix::from_int_rows(f, rows);
}

void add_unit_products(const Field& f, BilinearTable& products, const std::map<int, int>& dims) {
    for (auto [q, dq] : dims) {
        products[{0, q}] = {Matrix::identity(f, static_cast<std::size_t>(dq))};
        std::vector<Matrix> right;
        for (int a = 0; a < dq; ++a) right.push_back(arqtest::basis_column(f, dq, a));
        products[{q, 0}] = std::move(right);
    }
}

// k in degree 0 with nothing else.
DgaPtr point_dga(const Field& f) {
    GradedVectorSpace space;
    space.set_degree(0, {"e"});
    BilinearTable products;
    products[{0, 0}] = {Matrix::identity(f, 1)};
    return std::make_shared<FinDga>(f, space, 0, products, std::map<int, Matrix>{});
}

// k + two degree-2 classes + one degree-4 class; the degree-2 square is
// given by a symmetric 2x2 coefficient table.
DgaPtr two_cell_dga(const Field& f, long xx, long xy, long yx, long yy) {
    GradedVectorSpace space;
    space.set_degree(0, {"e"});
    space.set_degree(2, {"x", "y"});
    space.set_degree(4, {"w"});
    BilinearTable products;
    add_unit_products(f, products, {{0, 1}, {2, 2}, {4, 1}});
    products[{2, 2}] = {entry(f, {{xx, xy}}), entry(f, {{yx, yy}})};
    return std::make_shared<FinDga>(f, space, 0, products, std::map<int, Matrix>{});
}

}  // namespace

TEST_CASE("top degree reads off the highest surviving class") {
    Field f = Field::rationals();
    for (int d = 2; d <= 6; ++d) CHECK(top_degree(sphere_dga(f, d)) == d);
    CHECK(top_degree(point_dga(f)) == 0);
    CHECK(top_degree(wedge_s2_s4_dga(f)) == 4);
    CHECK(top_degree(truncated_poly_dga(f)) == 4);
    CHECK(top_degree(twisted_sphere5_dga(f)) == 5);
}

TEST_CASE("sphere models pair perfectly in every degree") {
    for (const Field& f : {Field::rationals(), Field::prime_field(7)}) {
        for (int d = 2; d <= 5; ++d) {
            PoincareReport p = poincare_check(sphere_dga(f, d));
            CHECK(p.d == d);
            CHECK(p.unit_ok);
            CHECK(p.top_ok);
            CHECK(p.left_perfect);
            CHECK(p.right_perfect);
            CHECK(p.ar_exists());
            CHECK_FALSE(p.ext_window_check.has_value());
            REQUIRE(p.witness.count(0) == 1);
            CHECK(p.witness.at(0).pairing == Matrix::identity(f, 1));
            CHECK(p.witness.at(d).rank == 1);
        }
        CHECK(ar_exists(twisted_sphere5_dga(f)));
        CHECK(ar_exists(point_dga(f)));
    }
}

TEST_CASE("truncated polynomial model pairs by identity matrices") {
    Field f = Field::rationals();
    PoincareReport p = poincare_check(truncated_poly_dga(f), 6);
    CHECK(p.ar_exists());
    for (int i : {0, 2, 4}) {
        REQUIRE(p.witness.count(i) == 1);
        CHECK(p.witness.at(i).pairing == Matrix::identity(f, 1));
        CHECK(p.witness.at(i).rank == 1);
    }
    REQUIRE(p.ext_window_check.has_value());
    CHECK(*p.ext_window_check);
}

TEST_CASE("wedge model fails through the zero middle pairing") {
    Field f = Field::rationals();
    PoincareReport p = poincare_check(wedge_s2_s4_dga(f), 6);
    CHECK(p.d == 4);
    CHECK(p.unit_ok);
    CHECK(p.top_ok);
    CHECK_FALSE(p.left_perfect);
    CHECK_FALSE(p.right_perfect);
    CHECK_FALSE(p.ar_exists());
    CHECK_FALSE(ar_exists(wedge_s2_s4_dga(f)));
    REQUIRE(p.witness.count(2) == 1);
    CHECK(p.witness.at(2).pairing == Matrix::zero(f, 1, 1));
    CHECK(p.witness.at(2).rank == 0);
    CHECK(p.witness.at(0).rank == 1);
    REQUIRE(p.ext_window_check.has_value());
    CHECK_FALSE(*p.ext_window_check);
}

TEST_CASE("two middle classes pair through an antidiagonal") {
    Field f = Field::rationals();
    auto r = two_cell_dga(f, 0, 1, 1, 0);
    REQUIRE(validate_dga(*r).ok());
    PoincareReport p = poincare_check(r);
    CHECK(p.ar_exists());
    CHECK(p.witness.at(2).pairing == entry(f, {{0, 1}, {1, 0}}));
    CHECK(p.witness.at(2).rank == 2);

    auto broken = two_cell_dga(f, 0, 1, 0, 0);
    REQUIRE(validate_dga(*broken).ok());
    PoincareReport q = poincare_check(broken);
    CHECK_FALSE(q.left_perfect);
    CHECK_FALSE(q.right_perfect);
    CHECK(q.witness.at(2).rank == 1);
}

TEST_CASE("verdict survives basis scaling and reordering") {
    Field f = Field::rationals();

    GradedVectorSpace space;
    space.set_degree(0, {"e"});
    space.set_degree(2, {"x"});
    space.set_degree(4, {"z"});
    BilinearTable products;
    add_unit_products(f, products, {{0, 1}, {2, 1}, {4, 1}});
    products[{2, 2}] = {entry(f, {{3}})};
    auto scaled = std::make_shared<FinDga>(f, space, 0, products, std::map<int, Matrix>{});
    REQUIRE(validate_dga(*scaled).ok());
    PoincareReport p = poincare_check(scaled);
    CHECK(p.ar_exists());
    CHECK(p.witness.at(2).pairing == entry(f, {{3}}));
    CHECK(p.witness.at(2).rank == 1);

    auto swapped = two_cell_dga(f, 0, 2, 2, 0);
    auto reference = two_cell_dga(f, 0, 1, 1, 0);
    CHECK(poincare_check(swapped).ar_exists() == poincare_check(reference).ar_exists());
}

TEST_CASE("windowed ext cross-check agrees with the pairing verdict") {
    Field f = Field::rationals();
    std::vector<DgaPtr> algebras{sphere_dga(f, 2), sphere_dga(f, 3), truncated_poly_dga(f),
                                 twisted_sphere5_dga(f), wedge_s2_s4_dga(f)};
    for (const auto& r : algebras) {
        PoincareReport p = poincare_check(r, 6);
        REQUIRE(p.ext_window_check.has_value());
        CHECK(*p.ext_window_check == p.ar_exists());
    }
    PoincareReport narrow = poincare_check(sphere_dga(f, 2), 1);
    REQUIRE(narrow.ext_window_check.has_value());
    CHECK_FALSE(*narrow.ext_window_check);
}

TEST_CASE("translate acts as the top shift on random modules when pairing is perfect") {
    Field f = Field::rationals();
    for (int d : {2, 3}) {
        auto r = sphere_dga(f, d);
        REQUIRE(ar_exists(r));
        Rng rng(77 + static_cast<std::uint64_t>(d));
        for (int it = 0; it < 6; ++it) {
            auto p = arqtest::random_module_with_cohomology(r, Side::left, rng, 2);
            WindowedModule tau = ar_translate(p, 6);
            REQUIRE(tau.valid_to.has_value());
            auto shifted = cohomology(suspend(*p, d - 1)).space().dims();
            std::map<int, int> got, want;
            for (auto [deg, n] : cohomology(*tau.module).space().dims())
                if (deg <= *tau.valid_to) got.emplace(deg, n);
            for (auto [deg, n] : shifted)
                if (deg <= *tau.valid_to) want.emplace(deg, n);
            CHECK(got == want);
        }
    }
}

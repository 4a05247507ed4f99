#include "doctest.h"
#include "stc/matrix.hpp"
#include "test_helpers.hpp"

using namespace stc;

namespace {

Matrix<Gaussian> random_gaussian_matrix(int r, int c) {
    Matrix<Gaussian> m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = testutil::random_gaussian(5, 3);
    return m;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(Matrix<Rational>::identity(3)) == 3);
    CHECK(rank(Matrix<Gaussian>(4, 2)) == 0);

    // [[1, i], [i, -1]] has rank 1: row2 = i * row1
    Matrix<Gaussian> m(2, 2);
    m(0, 0) = Gaussian(1);
    m(0, 1) = Gaussian::i();
    m(1, 0) = Gaussian::i();
    m(1, 1) = Gaussian(-1);
    CHECK(rank(m) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(Matrix<Rational>::identity(4)).empty());
    CHECK(kernel_basis(Matrix<Rational>(2, 3)).size() == 3);

    Matrix<Gaussian> m(1, 2);
    m(0, 0) = Gaussian(1);
    m(0, 1) = Gaussian::i();
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    // proportional to (-i, 1)
    CHECK(ker[0][0] * Gaussian(1) == -Gaussian::i() * ker[0][1]);
    CHECK(!is_zero(ker[0][1]));
}

TEST_CASE("solve basics") {
    Matrix<Rational> id = Matrix<Rational>::identity(3);
    std::vector<Rational> e1 = {Rational(1), Rational(0), Rational(0)};
    CHECK(*solve(id, e1) == e1);

    Matrix<Rational> zero(2, 2);
    std::vector<Rational> rhs = {Rational(1), Rational(0)};
    CHECK(!solve(zero, rhs));

    Matrix<Rational> two(1, 1);
    two(0, 0) = Rational(2);
    CHECK((*solve(two, {Rational(3)}))[0] == rat(3, 2));

    CHECK_THROWS_AS(solve(two, {Rational(1), Rational(2)}), std::invalid_argument);
}

TEST_CASE("rank-nullity on random matrices") {
    for (int t = 0; t < 60; ++t) {
        int r = testutil::random_int(1, 6), c = testutil::random_int(1, 6);
        auto m = random_gaussian_matrix(r, c);
        auto ker = kernel_basis(m);
        CHECK(rank(m) + int(ker.size()) == c);
        for (const auto& v : ker) {
            auto mv = m.apply(v);
            for (const auto& x : mv) CHECK(is_zero(x));
        }
    }
}

TEST_CASE("rank invariance under permutation and scaling") {
    for (int t = 0; t < 40; ++t) {
        int r = testutil::random_int(2, 5), c = testutil::random_int(2, 5);
        auto m = random_gaussian_matrix(r, c);
        int base = rank(m);
        Matrix<Gaussian> p = m;
        int i1 = testutil::random_int(0, r - 1), i2 = testutil::random_int(0, r - 1);
        for (int j = 0; j < c; ++j) std::swap(p(i1, j), p(i2, j));
        Gaussian s = testutil::random_gaussian(4, 2);
        if (s.is_zero()) s = Gaussian(2);
        int col = testutil::random_int(0, c - 1);
        for (int i = 0; i < r; ++i) p(i, col) = p(i, col) * s;
        CHECK(rank(p) == base);
    }
}

TEST_CASE("determinant and inverse") {
    Matrix<Rational> m(2, 2);
    m(0, 0) = rat(1);
    m(0, 1) = rat(2);
    m(1, 0) = rat(3);
    m(1, 1) = rat(4);
    CHECK(det(m) == rat(-2));
    auto mi = inverse(m);
    REQUIRE(mi);
    CHECK((*mi * m) == Matrix<Rational>::identity(2));

    Matrix<Rational> sing(2, 2);
    sing(0, 0) = rat(1);
    sing(0, 1) = rat(2);
    sing(1, 0) = rat(2);
    sing(1, 1) = rat(4);
    CHECK(!inverse(sing));
}

TEST_CASE("charpoly of a diagonal quadratic matrix") {
    // diag(x, y) with x = (3+sqrt 5)/2, y = (3-sqrt 5)/2: charpoly lambda^2-3lambda+1
    Quadratic x(5, rat(3, 2), rat(1, 2)), y = x.conj_sqrt();
    Matrix<Quadratic> m(2, 2);
    m(0, 0) = x;
    m(1, 1) = y;
    auto cp = charpoly(m);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == Quadratic(1));
    CHECK(cp[1] == Quadratic(-3));
    CHECK(cp[2] == Quadratic(1));
}

TEST_CASE("column span helpers") {
    Matrix<Rational> a(3, 2), b(3, 1);
    a(0, 0) = rat(1);
    a(1, 1) = rat(1);
    b(0, 0) = rat(2);
    b(1, 0) = rat(-5);
    CHECK(columns_contained(a, b));
    b(2, 0) = rat(1);
    CHECK(!columns_contained(a, b));

    auto inter = column_span_intersection(a, b);
    CHECK(inter.cols() == 0);
}

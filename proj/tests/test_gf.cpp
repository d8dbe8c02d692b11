#include "regen/gf.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace regen::gf;

namespace {

Matrix random_matrix(int rows, int cols, std::uint32_t q, std::mt19937_64& rng) {
    Matrix m(rows, cols, q);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = static_cast<std::uint32_t>(rng() % q);
    return m;
}

}  // namespace

TEST_CASE("field element arithmetic") {
    const Element a{3, 5}, b{4, 5};
    CHECK((a + b).value == 2);
    CHECK((a - b).value == 4);
    CHECK((a * b).value == 2);
    CHECK((a / b).value == 2);  // 3 * 4^-1 = 3 * 4 = 12 = 2 mod 5
    CHECK_THROWS_AS(Element(1, 6), std::invalid_argument);
    CHECK_THROWS_AS(a + Element(1, 7), std::invalid_argument);
    CHECK_THROWS_AS(a / Element(0, 5), std::domain_error);
}

TEST_CASE("rank basics") {
    CHECK(Matrix::identity(4, 5).rank() == 4);
    CHECK(Matrix(3, 7, 5).rank() == 0);
    Matrix m(2, 2, 5);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;  // second row = 2 * first
    CHECK(m.rank() == 1);
}

TEST_CASE("rank is invariant under row permutation and bounded by shape") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
        Matrix m = random_matrix(rows, cols, 7, rng);
        const int r = m.rank();
        CHECK(r <= std::min(rows, cols));
        // reverse the rows
        Matrix rev(rows, cols, 7);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) rev.at(i, j) = m.at(rows - 1 - i, j);
        CHECK(rev.rank() == r);
    }
}

TEST_CASE("solve on identity and inconsistent systems") {
    std::mt19937_64 rng(13);
    const Matrix b = random_matrix(4, 2, 5, rng);
    auto x = Matrix::identity(4, 5).solve(b);
    REQUIRE(x.has_value());
    CHECK(*x == b);

    Matrix singular(2, 2, 5);
    singular.at(0, 0) = 1;
    singular.at(1, 0) = 2;  // columns: (1,2), (0,0)
    Matrix rhs(2, 1, 5);
    rhs.at(0, 0) = 1;
    rhs.at(1, 0) = 3;  // not a multiple of (1,2)
    CHECK_FALSE(singular.solve(rhs).has_value());
    CHECK_THROWS_AS(singular.solve(Matrix(3, 1, 5)), std::invalid_argument);
}

TEST_CASE("solve round-trips on random consistent systems") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = 1 + int(rng() % 5), n = 1 + int(rng() % 5), p = 1 + int(rng() % 3);
        const Matrix a = random_matrix(m, n, 11, rng);
        const Matrix x0 = random_matrix(n, p, 11, rng);
        const Matrix b = a * x0;
        auto x = a.solve(b);
        REQUIRE(x.has_value());
        CHECK(a * *x == b);
    }
}

TEST_CASE("inverse") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        Matrix a = random_matrix(4, 4, 13, rng);
        if (a.rank() != 4) continue;
        CHECK(a * a.inverse() == Matrix::identity(4, 13));
    }
    CHECK_THROWS_AS(Matrix(3, 3, 5).inverse(), std::domain_error);
}

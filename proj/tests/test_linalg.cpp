#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdrm/linalg.hpp"

#include <random>
#include <set>

using namespace fdrm;

namespace {

Matrix rows(const FieldPtr& f, const std::vector<std::vector<int>>& r) {
    return Matrix::from_rows(f, r);
}

Matrix random_matrix(const FieldPtr& f, int k, int m, std::mt19937& rng) {
    Matrix M(f, k, m);
    std::uniform_int_distribution<int> d(0, (int)f->q() - 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) M.set(i, j, d(rng));
    return M;
}

}  // namespace

TEST_CASE("rref over GF(5)") {
    auto f5 = Field::get(5, 1);
    auto [R, piv] = rows(f5, {{2, 4}, {1, 2}}).rref();
    CHECK(R == rows(f5, {{1, 2}, {0, 0}}));
    CHECK(piv == std::vector<int>{0});

    auto [RI, pivI] = Matrix::identity(f5, 3).rref();
    CHECK(RI == Matrix::identity(f5, 3));
    CHECK(pivI == std::vector<int>{0, 1, 2});
}

TEST_CASE("rref is idempotent and preserves the row space") {
    auto f3 = Field::get(3, 1);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix M = random_matrix(f3, 4, 5, rng);
        auto [R, piv] = M.rref();
        auto [R2, piv2] = R.rref();
        CHECK(R2 == R);
        CHECK(piv2 == piv);
        CHECK(R.rank() == M.rank());
        CHECK((int)piv.size() == M.rank());
        // every row of M lies in the row space of R
        Matrix stacked = vstack(R, M);
        CHECK(stacked.rank() == R.rank());
    }
}

TEST_CASE("rank equals rank of the transpose") {
    auto f4 = Field::get(2, 2);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Matrix M = random_matrix(f4, 3, 5, rng);
        CHECK(M.rank() == M.transpose().rank());
        CHECK(M.rank() == M.anti_transpose().rank());
    }
}

TEST_CASE("anti transpose is an involution that flips the shape") {
    auto f2 = Field::get(2, 1);
    Matrix M = rows(f2, {{1, 1, 0}, {0, 1, 1}});
    Matrix A = M.anti_transpose();
    CHECK(A.rows() == 3);
    CHECK(A.cols() == 2);
    CHECK(A.anti_transpose() == M);
    // top-right entry maps to top-right entry of the rotated frame
    CHECK(A.at(0, 0) == M.at(1, 2));
    CHECK(A.at(2, 1) == M.at(0, 0));
}

TEST_CASE("unit and support use 1-indexed cells") {
    auto f2 = Field::get(2, 1);
    Matrix U = Matrix::unit(f2, 2, 3, 1, 3);
    CHECK(U.at(0, 2) == 1);
    CHECK(U.support() == std::vector<Cell>{{1, 3}});
    Matrix M = rows(f2, {{1, 0, 1}, {0, 1, 0}});
    CHECK(M.support() == std::vector<Cell>{{1, 1}, {1, 3}, {2, 2}});
}

TEST_CASE("nullspace solves M x = 0") {
    auto f3 = Field::get(3, 1);
    Matrix M = rows(f3, {{1, 2, 0}, {0, 0, 1}});
    auto ns = nullspace(M);
    REQUIRE(ns.size() == 1);
    for (const auto& x : ns) {
        for (int i = 0; i < M.rows(); ++i) {
            int acc = 0;
            for (int j = 0; j < M.cols(); ++j) acc = f3->add(acc, f3->mul(M.at(i, j), x[j]));
            CHECK(acc == 0);
        }
    }
    CHECK(nullspace(Matrix::identity(f3, 2)).empty());
}

TEST_CASE("span reduces generators") {
    auto f2 = Field::get(2, 1);
    Matrix M = rows(f2, {{1, 1}, {0, 1}});
    auto S = MatrixSpace::span(f2, 2, 2, {M, M});
    CHECK(S.dim() == 1);
    CHECK(S.contains(M));
    CHECK_FALSE(S.contains(Matrix::identity(f2, 2)));

    auto Z = MatrixSpace::span(f2, 2, 2, {});
    CHECK(Z.dim() == 0);
    CHECK(Z.contains(Matrix(f2, 2, 2)));

    // leading positions strictly increase and pivot entries are 1
    auto W = MatrixSpace::span(f2, 3, 3,
                               {rows(f2, {{1, 1, 1}, {0, 1, 0}, {0, 0, 0}}),
                                rows(f2, {{1, 0, 1}, {0, 0, 1}, {0, 0, 0}}),
                                rows(f2, {{1, 1, 1}, {0, 0, 0}, {0, 0, 1}})});
    CHECK(W.dim() == 3);
    auto lead = W.leading_positions();
    for (size_t i = 0; i + 1 < lead.size(); ++i) CHECK(lead[i] < lead[i + 1]);
    for (size_t i = 0; i < lead.size(); ++i) {
        const Matrix& b = W.basis()[i];
        CHECK(b.data()[lead[i]] == 1);
        for (size_t j = 0; j < lead.size(); ++j)
            if (j != i) CHECK(W.basis()[j].data()[lead[i]] == 0);
    }
}

TEST_CASE("element and contains agree") {
    auto f3 = Field::get(3, 1);
    auto S = MatrixSpace::span(f3, 2, 2, {rows(f3, {{1, 0}, {0, 1}}), rows(f3, {{0, 1}, {2, 0}})});
    REQUIRE(S.dim() == 2);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(S.contains(S.element({a, b})));
}

TEST_CASE("span odometer visits every element once") {
    auto f4 = Field::get(2, 2);
    auto S = MatrixSpace::span(f4, 2, 2,
                               {rows(f4, {{1, 0}, {0, 2}}), rows(f4, {{0, 1}, {3, 0}})});
    REQUIRE(S.dim() == 2);
    SpanOdometer odo(S);
    std::set<std::vector<int>> seen;
    for (long long t = 0; t < 16; ++t) {
        CHECK(odo.index() == t);
        CHECK(odo.value() == S.element(odo.digits()));
        // digits are the base-q expansion of t
        CHECK(odo.digits()[0] == (int)(t % 4));
        CHECK(odo.digits()[1] == (int)((t / 4) % 4));
        seen.insert(odo.value().data());
        odo.step();
    }
    CHECK(seen.size() == 16);
    CHECK(odo.index() == 0);  // wrapped
    CHECK(odo.value().is_zero());

    SpanOdometer mid(S, 7);
    CHECK(mid.index() == 7);
    CHECK(mid.value() == S.element(mid.digits()));
}

TEST_CASE("intersect_with_shape restricts support") {
    auto f2 = Field::get(2, 1);
    auto V1 = MatrixSpace::span(f2, 3, 3,
                                {rows(f2, {{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}),
                                 rows(f2, {{0, 1, 0}, {1, 1, 1}, {1, 1, 0}}),
                                 rows(f2, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})});
    auto V2 = MatrixSpace::span(f2, 3, 3,
                                {rows(f2, {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}),
                                 rows(f2, {{0, 1, 0}, {0, 0, 1}, {1, 1, 1}}),
                                 rows(f2, {{0, 0, 1}, {1, 1, 0}, {1, 0, 1}})});
    REQUIRE(V1.dim() == 3);
    REQUIRE(V2.dim() == 3);

    // right-justified staircase: rows keep their last 3, 2, 1 entries
    std::vector<Cell> shape = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    auto I1 = intersect_with_shape(V1, shape);
    CHECK(I1.dim() == 1);
    CHECK(I1.contains(rows(f2, {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})));
    auto I2 = intersect_with_shape(V2, shape);
    CHECK(I2.dim() == 0);

    // full shape returns the whole space
    std::vector<Cell> full;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) full.push_back({i, j});
    CHECK(intersect_with_shape(V1, full).dim() == 3);

    // dimension bound: dim V - (#cells outside the shape)
    CHECK(I1.dim() >= V1.dim() - (9 - (int)shape.size()));

    // every element of the intersection is supported in the shape
    SpanOdometer odo(I1);
    for (long long t = 0; t < 2; ++t, odo.step()) {
        for (auto [r, c] : odo.value().support()) {
            bool inside = false;
            for (auto cell : shape) inside |= (cell == Cell{r, c});
            CHECK(inside);
        }
    }
}

TEST_CASE("space_sum and subspace_intersection_dim") {
    auto f2 = Field::get(2, 1);
    auto A = MatrixSpace::span(f2, 2, 2, {Matrix::unit(f2, 2, 2, 1, 1)});
    auto B = MatrixSpace::span(f2, 2, 2, {Matrix::unit(f2, 2, 2, 2, 2)});
    CHECK(space_sum(A, B).dim() == 2);
    CHECK(space_sum(A, A).dim() == 1);

    Matrix X = rows(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    Matrix Y = rows(f2, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(subspace_intersection_dim(X, X) == 2);
    CHECK(subspace_intersection_dim(X, Y) == 0);
    Matrix Z = rows(f2, {{1, 0, 0, 0}, {0, 0, 1, 1}});
    CHECK(subspace_intersection_dim(X, Z) == 1);
    Matrix bad = rows(f2, {{1, 1, 0, 0}, {1, 1, 0, 0}});
    CHECK_THROWS_AS(subspace_intersection_dim(X, bad), std::invalid_argument);
}

TEST_CASE("intersection dimension matches exhaustive membership count over GF(2)") {
    auto f2 = Field::get(2, 1);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        // two random full-rank 2x4 matrices
        Matrix X(f2, 2, 4), Y(f2, 2, 4);
        do { X = random_matrix(f2, 2, 4, rng); } while (X.rank() != 2);
        do { Y = random_matrix(f2, 2, 4, rng); } while (Y.rank() != 2);
        int d = subspace_intersection_dim(X, Y);
        // count vectors of rowspace(X) also in rowspace(Y)
        int count = 0;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                std::vector<int> v(4);
                for (int j = 0; j < 4; ++j) v[j] = f2->add(f2->mul(a, X.at(0, j)), f2->mul(b, X.at(1, j)));
                Matrix row = Matrix::from_rows(f2, {v});
                if (vstack(Y, row).rank() == 2) ++count;
            }
        CHECK(count == (1 << d));
    }
}

TEST_CASE("paste copies a block") {
    auto f3 = Field::get(3, 1);
    Matrix M(f3, 3, 4);
    M.paste(rows(f3, {{1, 2}, {0, 1}}), 1, 2);
    CHECK(M.at(1, 2) == 1);
    CHECK(M.at(1, 3) == 2);
    CHECK(M.at(2, 3) == 1);
    CHECK(M.at(0, 0) == 0);
}

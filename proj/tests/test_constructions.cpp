#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdrm/constructions.hpp"
#include "fdrm/oracle.hpp"

using namespace fdrm;

namespace {

Matrix rows(const FieldPtr& f, const std::vector<std::vector<int>>& r) {
    return Matrix::from_rows(f, r);
}

bool supported_in(const MatrixSpace& S, const FerrersDiagram& F) {
    for (const auto& b : S.basis())
        for (auto [i, j] : b.support())
            if (!F.contains_cell(i, j)) return false;
    return true;
}

}  // namespace

TEST_CASE("multiplication matrices represent the extension field") {
    auto f3 = Field::get(3, 1);
    auto ext = Extension::get(f3, 2);
    for (auto order : {BasisOrder::ascending, BasisOrder::descending}) {
        CHECK(mult_matrix(*ext, ext->embed(1), order) == Matrix::identity(f3, 2));
        CHECK(mult_matrix(*ext, 0, order).is_zero());
        // additive in beta
        for (int b1 = 0; b1 < 9; ++b1)
            for (int b2 = 0; b2 < 9; ++b2) {
                auto sum = mult_matrix(*ext, ext->big()->add(b1, b2), order);
                CHECK(sum == mult_matrix(*ext, b1, order) + mult_matrix(*ext, b2, order));
            }
        // invertible for beta != 0, so the map is injective
        for (int b = 1; b < 9; ++b) CHECK(mult_matrix(*ext, b, order).rank() == 2);
    }
    // descending basis (alpha, 1): multiplication by alpha sends 1 to alpha,
    // whose only nonzero coordinate sits in the alpha column
    auto M = mult_matrix(*ext, ext->alpha(), BasisOrder::descending);
    CHECK(M.at(1, 0) == 1);  // row of b_2 = 1
    CHECK(M.at(1, 1) == 0);
}

TEST_CASE("rank-metric spaces of maximal dimension") {
    struct Params { int q, k, m, delta; };
    for (auto [q, k, m, delta] : {Params{2, 2, 3, 2}, {2, 3, 3, 2}, {3, 2, 2, 2}, {2, 3, 4, 3}}) {
        auto f = Field::get(q, 1);
        auto S = mrd(f, k, m, delta);
        CHECK(S.dim() == m * (k - delta + 1));
        auto rep = verify_delta_space(S, delta);
        CHECK(rep.ok);
    }
    // delta = 1 is the full matrix space
    CHECK(mrd(Field::get(2, 1), 2, 3, 1).dim() == 6);
    CHECK_THROWS_AS(mrd(Field::get(2, 1), 4, 3, 2), std::invalid_argument);  // needs k <= m
}

TEST_CASE("reference pair of 2x2 matrices over GF(5)") {
    auto f5 = Field::get(5, 1);
    auto S = MatrixSpace::span(f5, 2, 2,
                               {rows(f5, {{0, 1}, {3, 1}}), rows(f5, {{3, 1}, {3, 4}})});
    REQUIRE(S.dim() == 2);
    CHECK(verify_delta_space(S, 2).ok);
}

TEST_CASE("distance-delta generator matrices") {
    auto f5 = Field::get(5, 1);
    Matrix G = mds_code(f5, 4, 3);
    REQUIRE(G.rows() == 2);
    REQUIRE(G.cols() == 4);
    // every nonzero codeword has weight >= 3
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) {
            if (a == 0 && b == 0) continue;
            int wt = 0;
            for (int j = 0; j < 4; ++j)
                if (f5->add(f5->mul(a, G.at(0, j)), f5->mul(b, G.at(1, j))) != 0) ++wt;
            CHECK(wt >= 3);
        }

    auto f2 = Field::get(2, 1);
    CHECK(mds_code(f2, 3, 3) == rows(f2, {{1, 1, 1}}));          // repetition
    CHECK(mds_code(f2, 3, 2) == rows(f2, {{1, 1, 0}, {0, 1, 1}}));  // q = n - 1
    CHECK(mds_code(f2, 4, 1) == Matrix::identity(f2, 4));
    CHECK_THROWS_AS(mds_code(f2, 4, 2), std::invalid_argument);  // q < n - 1

    // q = n - 1 with a bigger field: generator still has full rank and the
    // right distance
    auto f3 = Field::get(3, 1);
    Matrix E = mds_code(f3, 4, 2);
    REQUIRE(E.rows() == 3);
    CHECK(E.rank() == 3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                int wt = 0;
                for (int j = 0; j < 4; ++j) {
                    int v = f3->add(f3->mul(a, E.at(0, j)),
                                    f3->add(f3->mul(b, E.at(1, j)), f3->mul(c, E.at(2, j))));
                    if (v != 0) ++wt;
                }
                CHECK(wt >= 2);
            }
}

TEST_CASE("cutting a maximal space down to a diagram") {
    auto F = FerrersDiagram::parse("6,3,2,2@6");
    for (int q : {2, 3}) {
        auto f = Field::get(q, 1);
        auto S = intersect_construction(F, 2, f);
        CHECK(S.dim() == 7);  // r_2 + r_3 + r_4
        CHECK(supported_in(S, F));
        CHECK(verify_delta_space(S, 2).ok);
    }

    // full rectangle recovers the maximal dimension
    FerrersDiagram R(std::vector<int>{4, 4, 4}, 4);
    auto S = intersect_construction(R, 2, Field::get(2, 1));
    CHECK(S.dim() == 8);
    CHECK(verify_delta_space(S, 2).ok);

    // staircase [3,2,1], delta 3, GF(2): only the identity survives
    auto f2 = Field::get(2, 1);
    auto I = intersect_construction(FerrersDiagram::parse("3,2,1@3"), 3, f2);
    REQUIRE(I.dim() == 1);
    CHECK(I.basis()[0] == Matrix::identity(f2, 3));
    CHECK(verify_delta_space(I, 3).ok);
}

TEST_CASE("one code per diagonal") {
    auto F = FerrersDiagram::parse("4,3,2,1@4");
    for (int q : {3, 4, 5}) {
        auto f = Field::get(q == 4 ? 2 : q, q == 4 ? 2 : 1);
        auto S = diagonal_construction(F, 3, f);
        CHECK(S.dim() == 3);
        CHECK(supported_in(S, F));
        CHECK(verify_delta_space(S, 3).ok);
    }
    // GF(2) cannot host the length-4 diagonal code, so only the length-3
    // diagonal contributes
    CHECK(diagonal_construction(F, 3, Field::get(2, 1)).dim() == 1);

    auto G = FerrersDiagram::parse("4,2,2,1@4");
    auto f2 = Field::get(2, 1);
    auto S = diagonal_construction(G, 2, f2);
    CHECK(S.dim() == 5);
    CHECK(S.dim() == tdelta_ferrers(G, 2).value);
    CHECK(verify_delta_space(S, 2).ok);

    // delta = 1 fills the whole diagram
    CHECK(diagonal_construction(G, 1, f2).dim() == G.size());
}

TEST_CASE("square diagrams pick the better of two candidates") {
    auto f5 = Field::get(5, 1);
    auto F1 = FerrersDiagram::parse("4,4,2,2@4");
    REQUIRE(tdelta_ferrers(F1, 4).value == 2);
    std::string method;
    auto S1 = square_construction(F1, f5, &method);
    CHECK(S1.dim() == 2);
    CHECK(method == "block_diag");
    CHECK(supported_in(S1, F1));
    CHECK(verify_delta_space(S1, 4).ok);

    auto f2 = Field::get(2, 1);
    auto F2 = FerrersDiagram::parse("6,6,6,6,4,4@6");
    REQUIRE(tdelta_ferrers(F2, 6).value == 4);
    auto S2 = square_construction(F2, f2, &method);
    CHECK(S2.dim() == 3);  // 2t - k + 1 = 3 beats floor(k/2) = 3 on the tie
    CHECK(method == "field_mul");
    CHECK(supported_in(S2, F2));
    CHECK(verify_delta_space(S2, 6).ok);

    CHECK_THROWS_AS(square_construction(FerrersDiagram::parse("3,2@4"), f2, nullptr),
                    std::invalid_argument);  // not square
    CHECK_THROWS_AS(square_construction(FerrersDiagram::parse("4,4,4,4@4"), f2, nullptr),
                    std::invalid_argument);  // t = k
    CHECK_THROWS_AS(square_construction(FerrersDiagram::parse("4,1,1,1@4"), f2, nullptr),
                    std::invalid_argument);  // t < k/2
}

TEST_CASE("multiplication matrices fit the square shape") {
    auto f2 = Field::get(2, 1);
    auto ext = Extension::get(f2, 6);
    auto F = FerrersDiagram::parse("6,6,6,6,4,4@6");
    // alpha^i for i <= 2t - k = 2 keeps the descending-basis matrix inside F
    for (int i = 0; i <= 2; ++i) {
        auto M = mult_matrix(*ext, ext->big()->pow(ext->alpha(), i), BasisOrder::descending);
        for (auto [r, c] : M.support()) CHECK(F.contains_cell(r, c));
    }
}

TEST_CASE("disjoint blocks add their ranks") {
    auto f2 = Field::get(2, 1);
    auto A = mrd(f2, 1, 2, 1);  // dim 2
    auto B = mrd(f2, 2, 2, 2);  // dim 2
    auto S = block_combine(A, B, 1, 2, 2, 4, 3, 5);
    CHECK(S.dim() == 2);
    CHECK(verify_delta_space(S, 3).ok);
    // support stays inside the intended blocks
    auto F = FerrersDiagram(std::vector<int>{5, 2, 2}, 5);
    CHECK(supported_in(S, F));

    // overlapping rows or columns are rejected
    CHECK_THROWS_AS(block_combine(A, B, 1, 1, 1, 3, 3, 5), std::invalid_argument);
    CHECK_THROWS_AS(block_combine(A, B, 1, 1, 2, 2, 3, 5), std::invalid_argument);

    // dimension is the smaller of the two inputs
    auto C = mrd(f2, 1, 1, 1);  // dim 1
    CHECK(block_combine(A, C, 1, 1, 2, 3, 2, 3).dim() == 1);
}

TEST_CASE("automatic construction on the reference levels") {
    auto f2 = Field::get(2, 1);
    struct Expect {
        const char* diagram;
        long long tdelta;
        int dim;
        const char* method;
        bool transposed;
    };
    const Expect cases[] = {
        {"5,5,5,5,5@5", 15, 15, "teo1", false},
        {"5,5,2,2,2@5", 6, 6, "teo1", false},
        {"3,3,2,2,1@5", 2, 2, "teo1", true},
        {"5,2,2,0,0@5", 2, 2, "auto-composite", false},
        {"3,2,1,1,0@5", 1, 1, "diagonal", false},
        {"4,3,0,0,0@5", 0, 0, "intersect", false},
    };
    for (const auto& c : cases) {
        CAPTURE(c.diagram);
        auto F = FerrersDiagram::parse(c.diagram);
        REQUIRE(tdelta_ferrers(F, 3).value == c.tdelta);
        auto res = construct_auto(F, 3, f2);
        CHECK(res.space.dim() == c.dim);
        CHECK(res.tdelta == c.tdelta);
        CHECK(res.method == c.method);
        CHECK(res.transposed == c.transposed);
        CHECK(res.attains_bound == (res.space.dim() == c.tdelta));
        CHECK(supported_in(res.space, F));
        if (res.space.dim() > 0) CHECK(verify_delta_space(res.space, 3).ok);
    }
}

TEST_CASE("automatic construction invariants") {
    auto f2 = Field::get(2, 1);
    for (const char* text : {"3,2,1@3", "4,2,2,1@4", "6,3,2,2@6", "2,2@2", "4,4,4@4"}) {
        auto F = FerrersDiagram::parse(text);
        for (int delta = 1; delta <= std::min(F.k(), F.m()); ++delta) {
            CAPTURE(text);
            CAPTURE(delta);
            auto res = construct_auto(F, delta, f2);
            long long T = tdelta_ferrers(F, delta).value;
            CHECK(res.tdelta == T);
            CHECK(res.space.dim() <= T);
            CHECK(res.attains_bound == (res.space.dim() == T));
            CHECK(supported_in(res.space, F));
            if (res.space.dim() > 0 && (1LL << res.space.dim()) <= 4096)
                CHECK(verify_delta_space(res.space, delta).ok);
        }
        // delta = 1 always fills the diagram
        CHECK(construct_auto(F, 1, f2).space.dim() == F.size());
    }
}

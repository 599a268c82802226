#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fdrm/gf.hpp"

using namespace fdrm;

namespace {

// Independent irreducibility check for monic quadratics over GF(p):
// reducible iff it has a root.
bool quadratic_has_root(int p, int c0, int c1) {
    for (int x = 0; x < p; ++x)
        if ((x * x + c1 * x + c0) % p == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    auto f2 = Field::get(2, 1);
    CHECK(f2->q() == 2);
    CHECK(f2->add(1, 1) == 0);
    CHECK(f2->mul(1, 1) == 1);
    CHECK(f2->alpha() == 1);

    auto f5 = Field::get(5, 1);
    CHECK(f5->mul(3, 4) == 2);
    CHECK(f5->sub(1, 3) == 3);
    CHECK(f5->neg(2) == 3);
    CHECK(f5->inv(4) == 4);
    CHECK(f5->pow(2, 4) == 1);
}

TEST_CASE("GF(4) uses x^2+x+1 and reduces products") {
    auto f4 = Field::get(2, 2);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
    CHECK(f4->mul(2, 2) == 3);  // x * x = x + 1
    CHECK(f4->mul(2, 3) == 1);  // x * (x+1) = 1
    CHECK(f4->alpha() == 2);
    CHECK(f4->order(2) == 3);
}

TEST_CASE("GF(8) modulus and primitive element") {
    auto f8 = Field::get(2, 3);
    CHECK(f8->modulus() == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1
    CHECK(f8->alpha() == 2);
    CHECK(f8->order(2) == 7);
    for (long long n = 1; n < 7; ++n) CHECK(f8->pow(2, n) != 1);
}

TEST_CASE("GF(9) modulus is the smallest-encoded irreducible quadratic") {
    auto f9 = Field::get(3, 2);
    long long best = -1;
    for (int c1 = 0; c1 < 3; ++c1)
        for (int c0 = 0; c0 < 3; ++c0) {
            if (quadratic_has_root(3, c0, c1)) continue;
            long long enc = c0 + 3 * c1 + 9;
            if (best < 0 || enc < best) best = enc;
        }
    long long enc = f9->modulus()[0] + 3 * f9->modulus()[1] + 9 * f9->modulus()[2];
    CHECK(enc == best);
    CHECK(f9->modulus() == std::vector<int>{1, 0, 1});  // x^2 + 1
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    for (auto [p, e] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
        auto f = Field::get(p, e);
        int q = (int)f->q();
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                for (int c = 0; c < q; ++c) {
                    CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
                    CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
            if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
            CHECK(f->add(a, f->neg(a)) == 0);
        }
        CHECK(f->order(f->alpha()) == q - 1);
    }
}

TEST_CASE("explicit modulus is validated") {
    auto f = Field::with_modulus(2, 2, {1, 1, 1});
    CHECK(f->same(*Field::get(2, 2)));
    CHECK_THROWS_AS(Field::with_modulus(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_THROWS_AS(Field::with_modulus(4, 1, {0, 1}), std::invalid_argument);     // p not prime
    CHECK_THROWS_AS(Field::get(2, 21), ResourceCapError);
}

TEST_CASE("extension fields embed and expand") {
    auto f2 = Field::get(2, 1);
    auto ext = Extension::get(f2, 3);
    CHECK(ext->big()->q() == 8);
    CHECK(ext->embed(0) == 0);
    CHECK(ext->embed(1) == 1);
    CHECK(ext->big()->order(ext->alpha()) == 7);
    for (int x = 0; x < 8; ++x) CHECK(ext->compose(ext->expand(x)) == x);
    // expand(alpha^2) is the third basis vector
    int a2 = ext->big()->mul(ext->alpha(), ext->alpha());
    CHECK(ext->expand(a2) == std::vector<int>{0, 0, 1});
    CHECK(ext->expand(1) == std::vector<int>{1, 0, 0});
}

TEST_CASE("extension of a non-prime base field is a ring homomorphism") {
    auto f4 = Field::get(2, 2);
    auto ext = Extension::get(f4, 2);  // GF(16) over GF(4)
    CHECK(ext->big()->q() == 16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(ext->embed(f4->add(a, b)) == ext->big()->add(ext->embed(a), ext->embed(b)));
            CHECK(ext->embed(f4->mul(a, b)) == ext->big()->mul(ext->embed(a), ext->embed(b)));
        }
    for (int a = 0; a < 4; ++a) CHECK(ext->project(ext->embed(a)) == a);
    for (int x = 0; x < 16; ++x) {
        auto coords = ext->expand(x);
        CHECK((int)coords.size() == 2);
        CHECK(ext->compose(coords) == x);
    }
    // expand is base-field linear
    for (int x = 0; x < 16; ++x)
        for (int c = 0; c < 4; ++c) {
            auto lhs = ext->expand(ext->big()->mul(ext->embed(c), x));
            auto rhs = ext->expand(x);
            for (auto& v : rhs) v = f4->mul(c, v);
            CHECK(lhs == rhs);
        }
    CHECK(Extension::get(f4, 1)->embed(3) == 3);
}

TEST_CASE("extension respects the size cap") {
    CHECK_THROWS_AS(Extension::get(Field::get(2, 3), 8), ResourceCapError);  // 8^8 = 2^24
}

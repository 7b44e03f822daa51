#include <doctest.h>

#include "deriv/linalg.hpp"
#include "deriv/multipoly.hpp"
#include "deriv/unipoly.hpp"
#include "test_util.hpp"

using namespace deriv;
using testutil::Rng;

namespace {
const UniPoly X = UniPoly::variable();
}

TEST_CASE("rational strings") {
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-4, 2)) == "-2");
    CHECK(*rational_from_string("3/2") == Rational(3, 2));
    CHECK(!rational_from_string("3/0"));
    CHECK(!rational_from_string("x"));
}

TEST_CASE("uni_divmod worked examples") {
    // (1 - X^2, X) -> (-X, 1)
    UniPoly b{Rational(1), Rational(0), Rational(-1)};
    auto [q, r] = uni_divmod(b, X);
    CHECK(q == -X);
    CHECK(r == UniPoly{Rational(1)});
    CHECK(X * q + r == b);

    auto [q0, r0] = uni_divmod(UniPoly{}, X);
    CHECK(q0.is_zero());
    CHECK(r0.is_zero());

    UniPoly cubic{Rational(2), Rational(0), Rational(0), Rational(1)};
    auto [q1, r1] = uni_divmod(cubic, UniPoly{Rational(1)});
    CHECK(q1 == cubic);
    CHECK(r1.is_zero());

    CHECK_THROWS_AS(uni_divmod(X, UniPoly{}), std::domain_error);
}

TEST_CASE("uni_divmod round trip property") {
    Rng rng(12345);
    for (int i = 0; i < 200; ++i) {
        UniPoly a = testutil::random_nonzero_unipoly(rng, 4);
        UniPoly b = testutil::random_unipoly(rng, 7);
        auto [q, r] = uni_divmod(b, a);
        CHECK(a * q + r == b);
        CHECK(r.degree() < a.degree());
    }
}

TEST_CASE("uni_derivative") {
    CHECK(UniPoly::monomial(3).derivative() == UniPoly::monomial(2, Rational(3)));
    CHECK(UniPoly{Rational(5)}.derivative().is_zero());
    UniPoly p{Rational(1), Rational(0), Rational(-1)};
    CHECK(p.derivative() == UniPoly{Rational(0), Rational(-2)});
}

TEST_CASE("derivative linearity and Leibniz") {
    Rng rng(99);
    for (int i = 0; i < 100; ++i) {
        UniPoly p = testutil::random_unipoly(rng, 5);
        UniPoly q = testutil::random_unipoly(rng, 5);
        CHECK((p + q).derivative() == p.derivative() + q.derivative());
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("ring laws on random polynomials") {
    auto ctx = make_context({"X", "Y", "Z"});
    Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        MultiPoly p = testutil::random_multipoly(rng, ctx);
        MultiPoly q = testutil::random_multipoly(rng, ctx);
        MultiPoly r = testutil::random_multipoly(rng, ctx);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == MultiPoly(ctx));
    }
}

TEST_CASE("multi arithmetic worked examples") {
    auto ctx = make_context({"X", "Y", "Z"});
    MultiPoly Y = MultiPoly::var(ctx, 1), Z = MultiPoly::var(ctx, 2);
    CHECK((Y - Z) + (Z - Y) == MultiPoly(ctx));
    CHECK(Y * Y == MultiPoly::var(ctx, 1, 2));
    MultiPoly Xv = MultiPoly::var(ctx, 0);
    MultiPoly one = MultiPoly::constant(ctx, Rational(1));
    CHECK(Rational(2) * (Xv * Y + one) == Rational(2) * Xv * Y + Rational(2) * one);
}

TEST_CASE("mismatched ring contexts rejected") {
    auto c1 = make_context({"X", "Y"});
    auto c2 = make_context({"X", "W"});
    MultiPoly p = MultiPoly::var(c1, 1);
    MultiPoly q = MultiPoly::var(c2, 1);
    CHECK_THROWS_AS(p + q, std::invalid_argument);
}

TEST_CASE("substitute worked examples") {
    auto ctx = make_context({"X", "Y"});
    MultiPoly Xv = MultiPoly::var(ctx, 0), Y = MultiPoly::var(ctx, 1);
    MultiPoly one = MultiPoly::constant(ctx, Rational(1));

    MultiPoly p = Xv * Y + one;
    CHECK(p.substitute({Xv, -Y}) == -(Xv * Y) + one);
    CHECK(Y.pow(3).substitute({Xv, -Y}) == -Y.pow(3));

    // Y under Y -> b0 + b1 Y in a ring carrying b0, b1 as variables.
    auto bctx = make_context({"X", "Y", "b0", "b1"});
    MultiPoly img = MultiPoly::var(bctx, 2) + MultiPoly::var(bctx, 3) * MultiPoly::var(bctx, 1);
    MultiPoly yv = MultiPoly::var(bctx, 1);
    CHECK(yv.substitute({MultiPoly::var(bctx, 0), img, MultiPoly::var(bctx, 2),
                         MultiPoly::var(bctx, 3)}) == img);
}

TEST_CASE("substitute is a ring homomorphism") {
    auto ctx = make_context({"X", "Y"});
    Rng rng(31);
    for (int i = 0; i < 40; ++i) {
        MultiPoly p = testutil::random_multipoly(rng, ctx, 3);
        MultiPoly q = testutil::random_multipoly(rng, ctx, 3);
        std::vector<MultiPoly> images = {testutil::random_multipoly(rng, ctx, 2),
                                         testutil::random_multipoly(rng, ctx, 2)};
        CHECK((p * q).substitute(images) == p.substitute(images) * q.substitute(images));
        CHECK((p + q).substitute(images) == p.substitute(images) + q.substitute(images));
    }
}

TEST_CASE("degree_in") {
    auto ctx = make_context({"X", "Y"});
    MultiPoly Xv = MultiPoly::var(ctx, 0), Y = MultiPoly::var(ctx, 1);
    CHECK((Xv * Y.pow(2) + Y).degree_in(1) == 2);
    CHECK(Xv.pow(3).degree_in(1) == 0);
    CHECK(MultiPoly(ctx).degree_in(1) == kNegInfDegree);
    CHECK(kNegInfDegree < -1000000);
}

TEST_CASE("linalg: solve, invert, determinant") {
    Matrix a = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
    CHECK(determinant(a) == Rational(-2));
    auto inv = invert(a);
    REQUIRE(inv);
    CHECK((*inv)[0][0] == Rational(-2));
    CHECK((*inv)[0][1] == Rational(1));

    auto sol = solve_linear({{Rational(1), Rational(1)}}, {Rational(1)});
    REQUIRE(sol);
    CHECK(sol->nullspace.size() == 1);

    auto none = solve_linear({{Rational(0)}, {Rational(0)}}, {Rational(1), Rational(0)});
    CHECK(!none);
}

TEST_CASE("dependent_combination") {
    // col3 = col1 + col2
    std::vector<Vector> cols = {{Rational(1), Rational(0)},
                                {Rational(0), Rational(1)},
                                {Rational(1), Rational(1)}};
    auto k = dependent_combination(cols);
    REQUIRE(k);
    Rational s0(0), s1(0);
    for (size_t j = 0; j < 3; ++j) {
        s0 += Rational((*k)[j]) * cols[j][0];
        s1 += Rational((*k)[j]) * cols[j][1];
    }
    CHECK(s0 == 0);
    CHECK(s1 == 0);
    Int g(0);
    for (const auto& x : *k) g = gcd(g, x);
    CHECK(g == 1);

    std::vector<Vector> indep = {{Rational(1), Rational(0)}, {Rational(1), Rational(1)}};
    CHECK(!dependent_combination(indep));

    // Fraction-free route agrees with rational rank.
    testutil::Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Vector> m;
        for (int j = 0; j < 3; ++j) {
            Vector col;
            for (int i = 0; i < 3; ++i)
                col.push_back(testutil::random_coeff(rng, -4, 4) / Rational(1 + (trial % 3)));
            m.push_back(std::move(col));
        }
        bool dependent = dependent_combination(m).has_value();
        CHECK(dependent == (rank(m) < 3));
    }
}

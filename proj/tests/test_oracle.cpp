#include <doctest.h>

#include "deriv/isotropy.hpp"
#include "deriv/lequain.hpp"
#include "deriv/oracle.hpp"
#include "deriv/printer.hpp"
#include "test_util.hpp"

using namespace deriv;
using testutil::Rng;

namespace {
const UniPoly X = UniPoly::variable();
}

TEST_CASE("oracle_psolve examples") {
    UniPoly b{Rational(1), Rational(0), Rational(-1)};  // 1 - X^2
    auto f = oracle_psolve(X, b, oracle_psolve_bound(X, b));
    REQUIRE(f);
    CHECK(*f == X);
    CHECK(f->derivative() == X * *f + b);

    CHECK(!oracle_psolve(X, UniPoly{Rational(1)}, 8));

    CHECK(oracle_psolve_bound(X, b) == 1);
    CHECK(oracle_psolve_bound(UniPoly{Rational(2)}, b) == 2);
}

TEST_CASE("oracle_psolve agrees with the division-sequence solver") {
    Rng rng(2024);
    int solvable = 0;
    for (int i = 0; i < 500; ++i) {
        UniPoly a = testutil::random_nonzero_unipoly(rng, 4);
        UniPoly b = testutil::random_unipoly(rng, 6);
        auto lhs = psolve(a, b);
        auto rhs = oracle_psolve(a, b, oracle_psolve_bound(a, b));
        REQUIRE(lhs.has_value() == rhs.has_value());
        if (lhs) {
            CHECK(*lhs == *rhs);  // the solution is unique when a != 0
            ++solvable;
        }
    }
    CHECK(solvable > 0);  // the corpus exercises both branches
}

TEST_CASE("isotropy enumeration: simple input leaves only the identity") {
    auto d = testutil::load_fixture("shamsuddin_xy1.dv");
    AnsatzConfig cfg;
    auto elems = oracle_isotropy_enum(d, cfg);
    REQUIRE(elems.size() == 1);
    CHECK(elems[0].is_identity());
}

TEST_CASE("isotropy enumeration: twin-component family members on the grid") {
    auto d = testutil::load_fixture("twin_shamsuddin.dv");
    auto ctx = d.context();
    AnsatzConfig cfg;
    cfg.coefficient_grid = {Rational(-1), Rational(0), Rational(1), Rational(2)};
    auto elems = oracle_isotropy_enum(d, cfg);
    CHECK(elems.size() > 1);
    CHECK(elems[0].is_identity());

    // rho(Y) = 2Y - Z, rho(Z) = Z is the (a,b,c,d) = (2,-1,0,1) member
    MultiPoly Y = MultiPoly::var(ctx, 1), Z = MultiPoly::var(ctx, 2);
    bool found = false;
    for (const auto& e : elems) {
        CHECK(commutes(e, d));
        if (e.forward()[1] == Rational(2) * Y - Z && e.forward()[2] == Z) found = true;
    }
    CHECK(found);

    // a + b = 1 and c + d = 1 hold across the whole enumeration
    for (const auto& e : elems) {
        CHECK(e.forward()[0] == MultiPoly::var(ctx, 0));
        for (int i = 1; i <= 2; ++i) {
            MultiPoly img = e.forward()[static_cast<size_t>(i)];
            CHECK(img.coeff_in(1, 1) + img.coeff_in(2, 1) ==
                  MultiPoly::constant(ctx, Rational(1)));
        }
    }
}

TEST_CASE("isotropy enumeration: odd cubic gives the sign flip") {
    // No coefficient of d(Y) = Y + Y^3 depends on X, so X-translations
    // commute as well; the fixed-X slice is exactly {id, Y -> -Y}.
    auto d = testutil::load_fixture("cubic_odd.dv");
    auto ctx = d.context();
    AnsatzConfig cfg;
    auto elems = oracle_isotropy_enum(d, cfg);
    CHECK(elems.size() == 2 * cfg.coefficient_grid.size());
    CHECK(elems[0].is_identity());
    std::vector<MultiPoly> fixed_x_images;
    for (const auto& e : elems) {
        CHECK(commutes(e, d));
        if (e.forward()[0] == MultiPoly::var(ctx, 0)) fixed_x_images.push_back(e.forward()[1]);
    }
    REQUIRE(fixed_x_images.size() == 2);
    CHECK(((fixed_x_images[0] == MultiPoly::var(ctx, 1) &&
            fixed_x_images[1] == -MultiPoly::var(ctx, 1)) ||
           (fixed_x_images[1] == MultiPoly::var(ctx, 1) &&
            fixed_x_images[0] == -MultiPoly::var(ctx, 1))));
}

TEST_CASE("isotropy enumeration matches the exact search on random affine inputs") {
    auto ctx = make_context({"X", "Y"});
    Rng rng(404);
    for (int i = 0; i < 15; ++i) {
        MultiPoly dy = MultiPoly::from_unipoly(ctx, testutil::random_unipoly(rng, 2, -2, 2)) +
                       MultiPoly::from_unipoly(ctx, testutil::random_unipoly(rng, 1, -2, 2)) *
                           MultiPoly::var(ctx, 1);
        Derivation d(ctx, {MultiPoly::constant(ctx, Rational(1)), dy});
        AnsatzConfig cfg;
        cfg.max_degree = 1;
        auto elems = oracle_isotropy_enum(d, cfg);
        IsotropyResult exact = affine_isotropy_search(d, 1);
        for (const auto& e : elems) {
            CHECK(commutes(e, d));
            if (exact.kind == IsotropyResult::Kind::Finite) {
                bool present = false;
                for (const auto& g : exact.elements) present = present || g == e;
                CHECK(present);
            }
        }
    }
}

TEST_CASE("isotropy enumeration: non-affine input uses the full grid") {
    auto d = testutil::load_fixture("nowicki_chain.dv");
    AnsatzConfig cfg;
    cfg.max_degree = 0;
    cfg.coefficient_grid = {Rational(-1), Rational(0), Rational(1)};
    auto elems = oracle_isotropy_enum(d, cfg);
    REQUIRE(!elems.empty());
    CHECK(elems[0].is_identity());
    for (const auto& e : elems) CHECK(commutes(e, d));
}

TEST_CASE("isotropy enumeration respects the budget") {
    auto d = testutil::load_fixture("nowicki_chain.dv");
    AnsatzConfig cfg;
    cfg.max_degree = 2;
    cfg.budget = 10;
    CHECK_THROWS_AS(oracle_isotropy_enum(d, cfg), BudgetExceededError);
}

TEST_CASE("ideal search finds the witness for the twin-component example") {
    auto d = testutil::load_fixture("twin_shamsuddin.dv");
    auto ctx = d.context();
    AnsatzConfig cfg;
    auto w = oracle_ideal_search(d, cfg);
    REQUIRE(w);
    CHECK(w->generator == MultiPoly::var(ctx, 1) - MultiPoly::var(ctx, 2));
    CHECK(w->cofactor == MultiPoly::var(ctx, 0));
    CHECK(d.apply(w->generator) == w->cofactor * w->generator);
}

TEST_CASE("ideal search on Y -> XY finds (Y)") {
    auto d = testutil::load_fixture("ymul.dv");
    AnsatzConfig cfg;
    auto w = oracle_ideal_search(d, cfg);
    REQUIRE(w);
    CHECK(w->generator == MultiPoly::var(d.context(), 1));
}

TEST_CASE("ideal search never produces a witness for a simple derivation") {
    auto d = testutil::load_fixture("shamsuddin_xy1.dv");
    AnsatzConfig cfg;
    CHECK(!oracle_ideal_search(d, cfg));

    Rng rng(808);
    auto ctx = make_context({"X", "Y"});
    int checked = 0;
    while (checked < 10) {
        UniPoly a = testutil::random_nonzero_unipoly(rng, 2, -2, 2);
        UniPoly b = testutil::random_unipoly(rng, 2, -2, 2);
        ShamsuddinForm form{ctx, {ShamsuddinComponent{a, {b}, {1}}}};
        if (!shamsuddin_simple(form).simple) continue;
        ++checked;
        auto w = oracle_ideal_search(shamsuddin_derivation(form), cfg);
        CHECK(!w);
    }
}

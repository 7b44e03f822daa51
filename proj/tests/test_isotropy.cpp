#include <doctest.h>

#include "deriv/isotropy.hpp"
#include "deriv/printer.hpp"
#include "test_util.hpp"

using namespace deriv;
using testutil::Rng;

namespace {

YDegreeDerivation make_ydeg(std::vector<UniPoly> h) {
    static const RingContextPtr ctx = make_context({"X", "Y"});
    return YDegreeDerivation{ctx, std::move(h)};
}

}  // namespace

TEST_CASE("roots of unity in Q") {
    CHECK(roots_of_unity_rational(1) == std::vector<Rational>{Rational(1)});
    CHECK(roots_of_unity_rational(2) == std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK(roots_of_unity_rational(3) == std::vector<Rational>{Rational(1)});
    CHECK_THROWS_AS(roots_of_unity_rational(0), std::invalid_argument);
}

TEST_CASE("odd cubic fixture has the order-2 group") {
    // d(Y) = Y + Y^3
    auto yd = YDegreeDerivation::from_derivation(testutil::load_fixture("cubic_odd.dv"));
    REQUIRE(yd);
    IsotropyResult res = isotropy_two_var(*yd);
    REQUIRE(res.elements.size() == 2);
    CHECK(res.elements[0].is_identity());
    CHECK(res.elements[1].forward()[1] == -MultiPoly::var(yd->ctx, 1));
    CHECK(res.completeness == IsotropyResult::Completeness::Complete);
    GroupCertificate cert = group_table(res);
    CHECK(cert.order == 2);
    CHECK(cert.cyclic);
    CHECK(compose(res.elements[1], res.elements[1]).is_identity());
}

TEST_CASE("Y^n + pX instances are trivial") {
    for (int n = 2; n <= 5; ++n) {
        for (int p = 1; p <= 2; ++p) {
            std::vector<UniPoly> h(static_cast<size_t>(n) + 1);
            h[0] = UniPoly{Rational(0), Rational(p)};  // pX
            h[static_cast<size_t>(n)] = UniPoly{Rational(1)};
            IsotropyResult res = isotropy_two_var(make_ydeg(std::move(h)));
            CHECK(res.elements.size() == 1);
            CHECK(res.elements[0].is_identity());
        }
    }
}

TEST_CASE("quadratic derivations always trivial; order divides 2") {
    Rng rng(101);
    for (int i = 0; i < 100; ++i) {
        std::vector<UniPoly> h(3);
        h[0] = testutil::random_unipoly(rng, 2);
        h[1] = testutil::random_unipoly(rng, 2);
        h[2] = testutil::random_nonzero_unipoly(rng, 2);
        IsotropyResult res = isotropy_two_var(make_ydeg(std::move(h)));
        CHECK(res.elements.size() == 1);
        CHECK(res.elements[0].is_identity());
    }
    for (int i = 0; i < 60; ++i) {
        int n = 2 + static_cast<int>(rng() % 4);
        std::vector<UniPoly> h(static_cast<size_t>(n) + 1);
        for (int k = 0; k < n; ++k) h[static_cast<size_t>(k)] = testutil::random_unipoly(rng, 2);
        h[static_cast<size_t>(n)] = testutil::random_nonzero_unipoly(rng, 2);
        YDegreeDerivation yd = make_ydeg(std::move(h));
        IsotropyResult res = isotropy_two_var(yd);
        CHECK((res.elements.size() == 1 || res.elements.size() == 2));
        if (n % 2 == 0) CHECK(res.elements.size() == 1);
        Derivation d = yd.derivation();
        for (const auto& e : res.elements) CHECK(commutes(e, d));
        // b_1^{n-1} = 1 for every returned element
        for (const auto& e : res.elements) {
            MultiPoly b1poly = e.forward()[1].coeff_in(1, 1);
            Rational b1 = b1poly.constant_value();
            Rational pw(1);
            for (int k = 0; k < n - 1; ++k) pw *= b1;
            CHECK(pw == 1);
        }
    }
}

TEST_CASE("two_var input validation") {
    CHECK_THROWS_AS(isotropy_two_var(make_ydeg({UniPoly{Rational(1)}, UniPoly{Rational(1)}})),
                    UnsupportedClassError);
}

TEST_CASE("simple Shamsuddin isotropy is trivial and complete") {
    auto d = testutil::load_fixture("shamsuddin_xy1.dv");
    auto form = recognize_shamsuddin(d);
    REQUIRE(form);
    IsotropyResult res = isotropy_shamsuddin(*form);
    CHECK(res.kind == IsotropyResult::Kind::Finite);
    CHECK(res.completeness == IsotropyResult::Completeness::Complete);
    REQUIRE(res.elements.size() == 1);
    CHECK(res.elements[0].is_identity());
}

TEST_CASE("twin-component affine family") {
    auto d = testutil::load_fixture("twin_shamsuddin.dv");
    auto form = recognize_shamsuddin(d);
    REQUIRE(form);
    IsotropyResult res = isotropy_shamsuddin(*form, 0);
    REQUIRE(res.kind == IsotropyResult::Kind::Affine);
    CHECK(res.completeness == IsotropyResult::Completeness::AnsatzOnly);
    const AffineFamily& fam = *res.family;
    CHECK(fam.dimension() == 2);
    CHECK(fam.is_infinite());

    auto has_eq = [&](const std::string& eq) {
        for (const auto& e : fam.equations)
            if (e == eq) return true;
        return false;
    };
    CHECK(has_eq("c[Y][Y] + c[Y][Z] = 1"));
    CHECK(has_eq("c[Z][Y] + c[Z][Z] = 1"));
    CHECK(has_eq("e[Y].0 = 0"));
    CHECK(has_eq("e[Z].0 = 0"));

    // the (a,b,c,d) = (2,-1,0,1) member from the grid example
    auto member = fam.member({Rational(-1), Rational(1)});
    REQUIRE(member);
    CHECK(member->forward()[1] ==
          Rational(2) * MultiPoly::var(d.context(), 1) - MultiPoly::var(d.context(), 2));
    CHECK(commutes(*member, d));

    // singular points of the family are rejected
    CHECK(!fam.member({Rational(0), Rational(0)}));

    // sampled members commute
    Rng rng(77);
    for (int i = 0; i < 20; ++i) {
        auto rho = fam.member({testutil::random_coeff(rng, -3, 3),
                               testutil::random_coeff(rng, -3, 3)});
        if (rho) CHECK(commutes(*rho, d));
    }
}

TEST_CASE("affine search on simple input finds only the identity") {
    auto d = testutil::load_fixture("shamsuddin_xy1.dv");
    IsotropyResult res = affine_isotropy_search(d, 3);
    CHECK(res.kind == IsotropyResult::Kind::Finite);
    CHECK(res.completeness == IsotropyResult::Completeness::AnsatzOnly);
    REQUIRE(res.elements.size() == 1);
    CHECK(res.elements[0].is_identity());
}

TEST_CASE("affine search: translation family on K[X]") {
    auto d = testutil::load_fixture("partial_x.dv");
    IsotropyResult res = affine_isotropy_search(d, 0);
    REQUIRE(res.kind == IsotropyResult::Kind::Affine);
    CHECK(res.family->alpha_free);
    CHECK(res.family->is_infinite());
    auto rho = res.family->member({Rational(5)});
    REQUIRE(rho);
    CHECK(commutes(*rho, d));
    CHECK(rho->forward()[0] ==
          MultiPoly::var(d.context(), 0) + MultiPoly::constant(d.context(), Rational(5)));
}

TEST_CASE("affine search: Y -> XY keeps the scaling family") {
    auto d = testutil::load_fixture("ymul.dv");
    IsotropyResult res = affine_isotropy_search(d, 2);
    REQUIRE(res.kind == IsotropyResult::Kind::Affine);
    CHECK(res.family->dimension() == 1);
    auto rho = res.family->member({Rational(2)});
    if (!rho) rho = res.family->member({Rational(3)});
    REQUIRE(rho);
    CHECK(commutes(*rho, d));
}

TEST_CASE("affine search rejects non-Y-affine inputs") {
    auto d = testutil::load_fixture("nowicki_chain.dv");
    CHECK_THROWS_AS(affine_isotropy_search(d, 1), UnsupportedClassError);
}

TEST_CASE("group table validation") {
    auto ctx = make_context({"X", "Y"});
    IsotropyResult res;
    res.kind = IsotropyResult::Kind::Finite;
    res.elements.push_back(Automorphism::identity(ctx));
    GroupCertificate cert = group_table(res);
    CHECK(cert.order == 1);
    CHECK(cert.cyclic);

    // a non-group set fails certification
    MultiPoly Xv = MultiPoly::var(ctx, 0), Y = MultiPoly::var(ctx, 1);
    MultiPoly one = MultiPoly::constant(ctx, Rational(1));
    res.elements.emplace_back(ctx, std::vector<MultiPoly>{Xv, Y + one},
                              std::vector<MultiPoly>{Xv, Y - one});
    CHECK_THROWS_AS(group_table(res), std::logic_error);
}

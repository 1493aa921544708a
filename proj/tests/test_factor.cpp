#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwl/factor.hpp"
#include "mwl/io.hpp"

using namespace mwl;

namespace {
QPoly P(const std::string& s, const std::string& var = "x") {
    return qpoly_from_text(s, var);
}
}  // namespace

TEST_CASE("rational roots") {
    auto f = structured_factor(P("x^2 - 1"));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].poly == P("x - 1"));
    CHECK(f.factors[1].poly == P("x + 1"));
    CHECK(f.factors[0].status == FactorStatus::ProvenIrreducible);
    CHECK(f.product() == P("x^2 - 1"));
}

TEST_CASE("substitution detection of the degree-24 eliminant") {
    QPoly phi = P("u^24 - 270*u^12 - 27", "u");
    auto [psi, k] = detect_substitution(phi);
    CHECK(k == 12);
    CHECK(psi == P("u^2 - 270*u - 27", "u"));
    // Psi is irreducible over Q (discriminant 73008 is not a square)
    CHECK(proves_irreducible(psi));
    // the full polynomial stays unresolved by the structured strategies alone
    auto f = structured_factor(phi);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].status == FactorStatus::Unresolved);
    // verification mode accepts the two-factor split
    CHECK(verify_factorization(phi, Rational(1),
                               {{P("u^8 - 6*u^4 - 3", "u"), 1},
                                {P("u^16 + 6*u^12 + 39*u^8 - 18*u^4 + 9", "u"), 1}}));
    CHECK(!verify_factorization(phi, Rational(1), {{P("u^8 - 6*u^4 - 3", "u"), 2}}));
}

TEST_CASE("degree-40 polynomial against its ten printed factors") {
    std::vector<std::pair<QPoly, int>> factors = {
        {P("U^2 - 44*U - 2", "U"), 1},
        {P("U^2 + 44*U - 2", "U"), 1},
        {P("U^2 + 4*U + 54", "U"), 1},
        {P("U^2 - 4*U + 54", "U"), 1},
        {P("U^4 + 1940*U^2 + 4", "U"), 1},
        {P("U^4 - 832*U^2 + 256", "U"), 1},
        {P("U^4 + 832*U^2 + 256", "U"), 1},
        {P("U^4 - 92*U^2 + 2916", "U"), 1},
        {P("U^8 - 200*U^7 + 20000*U^6 + 58800*U^5 + 87608*U^4 - 117600*U^3 + 80000*U^2 + "
           "1600*U + 16",
           "U"),
         1},
        {P("U^8 + 200*U^7 + 20000*U^6 - 58800*U^5 + 87608*U^4 + 117600*U^3 + 80000*U^2 - "
           "1600*U + 16",
           "U"),
         1},
    };
    QPoly product = QPoly::one();
    for (const auto& [f, m] : factors) product = product * f;
    CHECK(product.degree_checked() == 40);
    CHECK(verify_factorization(product, Rational(1), factors));
    // every quadratic and quartic in the list certifies as irreducible
    auto sf = structured_factor(P("U^2 - 44*U - 2", "U"));
    CHECK(sf.factors.size() == 1);
    CHECK(sf.factors[0].status == FactorStatus::ProvenIrreducible);
}

TEST_CASE("eisenstein certificate") {
    CHECK(proves_irreducible(P("x^12 - 44*x^6 - 2")));
    CHECK(proves_irreducible(P("x^3 - 2")));
    CHECK(!proves_irreducible(P("x^4 - 4")));  // = (x^2-2)(x^2+2)
}

TEST_CASE("quartic closed form") {
    auto f = structured_factor(P("x^4 - 10*x^2 + 1"));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].status == FactorStatus::ProvenIrreducible);
    auto g = structured_factor(P("x^4 + 4"));  // = (x^2-2x+2)(x^2+2x+2)
    REQUIRE(g.factors.size() == 2);
    CHECK(g.product() == P("x^4 + 4"));
}

TEST_CASE("multiplicities and leading unit survive the round trip") {
    QPoly p = P("3*x^2 - 3") * P("x - 1");  // 3 (x-1)^2 (x+1)
    auto f = structured_factor(p);
    CHECK(f.unit == Rational(3));
    CHECK(f.product() == p);
    int mult_of_x_minus_1 = 0;
    for (const auto& fac : f.factors)
        if (fac.poly == P("x - 1")) mult_of_x_minus_1 = fac.multiplicity;
    CHECK(mult_of_x_minus_1 == 2);
    CHECK_THROWS(structured_factor(QPoly()));
}

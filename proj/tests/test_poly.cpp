#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mwl/io.hpp"
#include "mwl/poly.hpp"

using namespace mwl;

namespace {
QPoly P(const std::string& s, const std::string& var = "x") {
    return qpoly_from_text(s, var);
}
std::mt19937_64 rng(20240811);
QPoly random_poly(int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-9, 9), den(1, 4);
    std::vector<Rational> cs(deg(rng) + 1);
    for (auto& c : cs) c = Rational(coef(rng), den(rng));
    return QPoly(std::move(cs));
}
}  // namespace

TEST_CASE("degree sentinel is minus infinity, never -1") {
    QPoly z;
    CHECK(z.is_zero());
    CHECK(!z.degree().has_value());
    CHECK_THROWS(z.degree_checked());
    CHECK(P("5").degree_checked() == 0);
}

TEST_CASE("divrem identities") {
    auto [q, r] = divrem(P("x^2 - 1"), P("x - 1"));
    CHECK(q == P("x + 1"));
    CHECK(r.is_zero());
    CHECK_THROWS(divrem(P("x"), QPoly()));
}

TEST_CASE("product identities from the factor tables") {
    CHECK(P("u^8 - 6*u^4 - 3", "u") * P("u^16 + 6*u^12 + 39*u^8 - 18*u^4 + 9", "u") ==
          P("u^24 - 270*u^12 - 27", "u"));
    CHECK(P("2*u^3 - 1", "u") * P("u^3 + 4", "u") == P("2*u^6 + 7*u^3 - 4", "u"));
}

TEST_CASE("ring axioms on random polynomials") {
    for (int i = 0; i < 40; ++i) {
        QPoly p = random_poly(5), q = random_poly(5), r = random_poly(4);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("divrem round-trip") {
    for (int i = 0; i < 60; ++i) {
        QPoly p = random_poly(7), q = random_poly(4);
        if (q.is_zero()) continue;
        auto [quot, rem] = divrem(p, q);
        CHECK(p == q * quot + rem);
        if (!rem.is_zero()) CHECK(rem.degree_checked() < q.degree_checked());
    }
}

TEST_CASE("gcd") {
    CHECK(gcd_poly(P("x^2 - 1"), P("x^2 - 2*x + 1")) == P("x - 1"));
    CHECK(gcd_poly(P("3*x^2 - 3"), QPoly()) == P("x^2 - 1"));
    CHECK(gcd_poly(QPoly(), QPoly()).is_zero());
    for (int i = 0; i < 30; ++i) {
        QPoly p = random_poly(5), q = random_poly(5);
        if (p.is_zero() || q.is_zero()) continue;
        QPoly g = gcd_poly(p, q);
        if (g.is_zero()) continue;
        CHECK(divrem(p, g).second.is_zero());
        CHECK(divrem(q, g).second.is_zero());
    }
}

TEST_CASE("inflate, deflate, reverse") {
    QPoly p = P("x^2 - 270*x - 27");
    CHECK(p.inflate(12) == P("x^24 - 270*x^12 - 27"));
    CHECK(P("x^24 - 270*x^12 - 27").deflation_index() == 12);
    CHECK(P("x^24 - 270*x^12 - 27").deflate(12) == p);
    CHECK(P("2*x^3 + x").reverse() == P("x^2 + 2"));
    CHECK(P("x^3 + x").val_at_zero() == 1);
}

TEST_CASE("squarefree decomposition") {
    QPoly p = P("x - 1") * P("x - 1") * P("x + 2") * P("x^2 + 1") * P("x^2 + 1") * P("x^2 + 1");
    auto parts = squarefree_decomposition(p);
    QPoly rebuilt = QPoly::one();
    for (const auto& [g, m] : parts)
        for (int i = 0; i < m; ++i) rebuilt = rebuilt * g;
    CHECK(rebuilt == p.monic());
    CHECK(squarefree_part(p) == (P("x - 1") * P("x + 2") * P("x^2 + 1")).monic());
}

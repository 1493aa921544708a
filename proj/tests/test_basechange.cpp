#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mwl/basechange.hpp"
#include "mwl/derive.hpp"

using namespace mwl;

TEST_CASE("lift of (2,1) generators") {
    auto basis = derive_basis(SurfaceModel(2, 1));
    MasterPoint p1 = lift_to_master(basis.sections[0]);
    CHECK(p1.k == 360);
    CHECK(p1.verify());
    // P1 = (-t^120, 1)
    CHECK(p1.X.terms().size() == 1);
    CHECK((p1.X.coeff(120) + TowerElement(1)).is_zero());
    CHECK((p1.Y.coeff(0) - TowerElement(1)).is_zero());
}

TEST_CASE("lift shapes") {
    // (1,2): x-exponents {120, -60}, y-exponents {90, -90}
    auto b12 = derive_basis(SurfaceModel(1, 2));
    MasterPoint p = lift_to_master(b12.sections[0]);
    CHECK(p.verify());
    std::set<int> xe, ye;
    for (const auto& [e, c] : p.X.terms()) xe.insert(e);
    for (const auto& [e, c] : p.Y.terms()) ye.insert(e);
    CHECK(xe == std::set<int>{-60, 120});
    CHECK(ye == std::set<int>{-90, 90});

    // (1,3): x-exponents within {-40, 80}, y within {-60, 60, 180}
    auto b13 = derive_basis(SurfaceModel(1, 3));
    MasterPoint q = lift_to_master(b13.sections[0]);
    CHECK(q.verify());
    for (const auto& [e, c] : q.X.terms()) CHECK((e == -40 || e == 80));
    for (const auto& [e, c] : q.Y.terms()) CHECK((e == -60 || e == 60 || e == 180));
}

TEST_CASE("exponent law") {
    // X-exponents are exactly { k (i - a/3) : A_i != 0 }
    for (auto [a, b] : {std::pair{2, 1}, {1, 2}, {2, 2}, {1, 3}, {1, 4}}) {
        SurfaceModel s(a, b);
        int k = s.master_exponent();
        for (const auto& sec : derive_basis(s).sections) {
            MasterPoint p = lift_to_master(sec);
            std::set<int> expect, got;
            for (const auto& [i, c] : sec.x.terms()) expect.insert(k * i - k * s.a / 3 * 1);
            for (const auto& [e, c] : p.X.terms()) got.insert(e);
            // k*a/3 is integral for every surface in the family
            CHECK(expect == got);
        }
    }
}

TEST_CASE("partner-lift consistency") {
    // lifting the partner image matches the reversed-coefficient formula
    for (auto [a, b] : {std::pair{2, 1}, {1, 2}, {1, 3}}) {
        SurfaceModel s(a, b);
        int n = s.n(), k = s.master_exponent(), ap = s.a_partner();
        for (const auto& sec : derive_basis(s).sections) {
            MasterPoint direct = lift_to_master(apply_partner_map(sec));
            TLaurent X_formula, Y_formula;
            for (const auto& [i, c] : sec.x.terms())
                X_formula = X_formula +
                            TLaurent::monomial(c, k * (2 * n - i) - k * ap / 3);
            for (const auto& [j, c] : sec.y.terms())
                Y_formula = Y_formula +
                            TLaurent::monomial(c, k * (3 * n - j) - k * ap / 2);
            CHECK((direct.X - X_formula).reduces_to_zero());
            CHECK((direct.Y - Y_formula).reduces_to_zero());
        }
    }
}

TEST_CASE("scale_block") {
    GramMatrix m1 = fixture_m1();
    GramMatrix s = scale_block(360, m1);
    CHECK(s.entries[0][0] == Rational(120));
    CHECK(s.entries[0][1] == Rational(60));
    CHECK(bareiss_det(s.entries) == Rational(360) * Rational(360) / Rational(12));
    CHECK(scale_block(1, m1).entries == m1.entries);
    // 90 M4 has determinant 90^8
    CHECK(bareiss_det(scale_block(90, fixture_m4()).entries) == Rational(90).pow(8));
}

TEST_CASE("fixture determinants") {
    CHECK(det(fixture_m5()) == Rational(1));
    CHECK(det(fixture_m10()) == Rational(625));
    CHECK(det(fixture_m4()) == Rational(1));
    CHECK(det(fixture_m3()) == Rational(1, 3));
    CHECK(det(fixture_m2()) == Rational(1, 4));
    CHECK(det(fixture_m2_prime()) == Rational(1, 9));
    CHECK(det(fixture_m1()) == Rational(1, 12));
}

TEST_CASE("block assembly") {
    std::vector<BlockGram::Block> blocks = {
        {"360 M1", 360, fixture_m1(), true},       {"360 M1", 360, fixture_m1(), true},
        {"180 M2", 180, fixture_m2(), true},       {"180 M2", 180, fixture_m2(), true},
        {"180 M2'", 180, fixture_m2_prime(), true}, {"120 M3", 120, fixture_m3(), true},
        {"120 M3", 120, fixture_m3(), true},       {"90 M4", 90, fixture_m4(), true},
        {"72 M5", 72, fixture_m5(), true},         {"72 M5", 72, fixture_m5(), true},
        {"36 M10", 36, fixture_m10(), true},
    };
    BlockGram bg = assemble_m68(blocks);
    CHECK(bg.total_rank() == 68);
    CHECK(bg.total_det() == expected_master_det());
    auto fac = bg.factorization();
    CHECK(fac[Integer(2)] == 152);
    CHECK(fac[Integer(3)] == 118);
    CHECK(fac[Integer(5)] == 40);

    // dropping the (2,2) block leaves rank 64 and must be rejected
    std::vector<BlockGram::Block> missing = blocks;
    missing.erase(missing.begin() + 4);
    CHECK_THROWS(assemble_m68(missing));

    // the combined (2,1)/(3,1) contribution is 360^4/144 = 2^8 3^6 5^4
    Rational pair = blocks[0].block_det() * blocks[1].block_det();
    CHECK(pair == Rational(360).pow(4) / Rational(144));
    auto pf = factor_rational(pair);
    CHECK(pf[Integer(2)] == 8);
    CHECK(pf[Integer(3)] == 6);
    CHECK(pf[Integer(5)] == 4);
}

TEST_CASE("determinant factorization identity") {
    Rational lhs = Rational(360).pow(4) * Rational(180).pow(8) * Rational(180).pow(4) *
                   Rational(120).pow(12) * Rational(90).pow(8) * Rational(72).pow(16) *
                   Rational(36).pow(16) * Rational(625) /
                   (Rational(144) * Rational(16) * Rational(9) * Rational(9));
    CHECK(lhs == expected_master_det());
}

TEST_CASE("full assembly without external data") {
    MasterReport rep = assemble_master({}, {}, {});
    CHECK(rep.points.size() == 36);
    CHECK(rep.all_points_verified());
    CHECK(rep.rank_sum == 68);
    CHECK(rep.det_matches);
    CHECK(!rep.complete);
    CHECK(rep.notes.size() >= 3);
}

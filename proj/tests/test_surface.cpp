#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwl/surface.hpp"

using namespace mwl;

TEST_CASE("validation") {
    CHECK_THROWS(SurfaceModel(4, 2));
    CHECK_THROWS(SurfaceModel(2, 4));
    CHECK_THROWS(SurfaceModel(-1, 2));
    CHECK_THROWS(SurfaceModel(3, 0));
    CHECK_NOTHROW(SurfaceModel(0, 5));
    CHECK_NOTHROW(SurfaceModel(0, 6));
    CHECK_NOTHROW(SurfaceModel(2, 2));
    CHECK_NOTHROW(SurfaceModel(1, 10));
}

TEST_CASE("fiber classification") {
    auto f21 = classify_fibers(SurfaceModel(2, 1));
    REQUIRE(f21.size() == 3);
    CHECK(f21[0].place == FiberInfo::Place::Zero);
    CHECK(f21[0].kodaira == KodairaType::IV);
    CHECK(f21[0].lattice == RootLattice::A2);
    CHECK(f21[1].kodaira == KodairaType::II);
    CHECK(f21[2].place == FiberInfo::Place::Infinity);
    CHECK(f21[2].kodaira == KodairaType::I0star);
    CHECK(f21[2].lattice == RootLattice::D4);

    // (1,10): exactly 12 singular fibers, all of type II
    auto k3 = classify_fibers(SurfaceModel(1, 10));
    CHECK(k3.size() == 12);
    for (const auto& f : k3) CHECK(f.kodaira == KodairaType::II);

    // (0,6): fibers only at the six roots
    auto f06 = classify_fibers(SurfaceModel(0, 6));
    CHECK(f06.size() == 6);
    for (const auto& f : f06) {
        CHECK(f.place == FiberInfo::Place::RootOfUnity);
        CHECK(f.kodaira == KodairaType::II);
    }
}

TEST_CASE("rank table") {
    struct Row {
        int a, b, rank;
        const char* lattice;
    };
    const Row rows[] = {
        {2, 1, 2, "A2v(1/2)"}, {3, 1, 2, "A2v(1/2)"}, {1, 2, 4, "D4v"},
        {2, 2, 4, "A2v+A2v"},  {3, 2, 4, "D4v"},      {1, 3, 6, "E6v"},
        {2, 3, 6, "E6v"},      {1, 4, 8, "E8"},       {1, 5, 8, "E8"},
        {0, 5, 8, "E8"},       {0, 6, 8, "E8"},
    };
    for (const auto& r : rows) {
        SurfaceModel s(r.a, r.b);
        CHECK(shioda_tate_rank(s) == r.rank);
        CHECK(lattice_type(s).name == r.lattice);
        CHECK(lattice_type(s).rank == r.rank);
    }
    CHECK(shioda_tate_rank(SurfaceModel(1, 10)) == 16);
    CHECK(lattice_type(SurfaceModel(1, 10)).name == "K3-rank16");

    // decomposition ranks sum to 68
    int sum = shioda_tate_rank(SurfaceModel(1, 10));
    const std::pair<int, int> dec[] = {{0, 5}, {1, 5}, {1, 4}, {2, 3}, {1, 3},
                                       {2, 2}, {3, 2}, {1, 2}, {3, 1}, {2, 1}};
    for (auto [a, b] : dec) sum += shioda_tate_rank(SurfaceModel(a, b));
    CHECK(sum == 68);
}

TEST_CASE("shioda-tate examples") {
    CHECK(shioda_tate_rank(SurfaceModel(2, 1)) == 2);  // 8 - (2+4)
    CHECK(shioda_tate_rank(SurfaceModel(1, 4)) == 8);
    CHECK(shioda_tate_rank(SurfaceModel(1, 10)) == 16);  // 2*11 - 2 - 4*1
}

TEST_CASE("birational partner") {
    auto p21 = birational_partner(SurfaceModel(2, 1));
    CHECK(p21.partner == SurfaceModel(3, 1));
    CHECK(p21.forward.find("v^2") != std::string::npos);

    auto p110 = birational_partner(SurfaceModel(1, 10));
    CHECK(p110.partner == SurfaceModel(1, 10));  // self-dual
    CHECK(p110.forward.find("v^4") != std::string::npos);
    CHECK(p110.forward.find("v^6") != std::string::npos);

    CHECK(birational_partner(SurfaceModel(0, 5)).partner == SurfaceModel(1, 5));
}

TEST_CASE("partner involution and rank symmetry") {
    const std::pair<int, int> family[] = {{2, 1}, {3, 1}, {1, 2}, {2, 2}, {3, 2}, {1, 3},
                                          {2, 3}, {1, 4}, {1, 5}, {0, 5}, {0, 6}, {1, 10}};
    for (auto [a, b] : family) {
        SurfaceModel s(a, b);
        SurfaceModel p = birational_partner(s).partner;
        CHECK(birational_partner(p).partner == s);
        CHECK(shioda_tate_rank(s) == shioda_tate_rank(p));
    }
}

TEST_CASE("master surface marker") {
    SurfaceModel m = SurfaceModel::master();
    CHECK(m.is_master());
    CHECK(m.master_exponent() == 1);
    CHECK(SurfaceModel(1, 3).master_exponent() == 120);
    CHECK(SurfaceModel(1, 10).master_exponent() == 36);
    CHECK_THROWS(SurfaceModel(1, 7).master_exponent());
    CHECK_THROWS(classify_fibers(m));
}

TEST_CASE("unsupported fiber order") {
    // order 5 would be type II*, never minimal in this family
    CHECK_THROWS(fiber_from_order(5));
    // (1,6): a' = 5 at infinity; classification refuses honestly
    CHECK_THROWS(classify_fibers(SurfaceModel(1, 6)));
}

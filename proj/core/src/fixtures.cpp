#include "mwl/basechange.hpp"

namespace mwl {

namespace {
GramMatrix from_ints(const std::vector<std::vector<int>>& m, const Rational& scale) {
    GramMatrix g;
    for (const auto& row : m) {
        std::vector<Rational> r;
        for (int v : row) r.push_back(Rational(v) * scale);
        g.entries.push_back(std::move(r));
    }
    return g;
}
}  // namespace

GramMatrix fixture_m1() {
    return from_ints({{2, 1}, {1, 2}}, Rational(1, 6));
}

GramMatrix fixture_m2() {
    return from_ints({{2, 0, 0, 1}, {0, 2, 0, 1}, {0, 0, 2, 1}, {1, 1, 1, 2}}, Rational(1, 2));
}

GramMatrix fixture_m2_prime() {
    return from_ints({{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 2}}, Rational(1, 3));
}

GramMatrix fixture_m3() {
    return from_ints(
        {
            {4, 1, 1, 1, 1, -2},
            {1, 4, 1, 1, 1, -2},
            {1, 1, 4, -2, 1, -2},
            {1, 1, -2, 4, 1, 1},
            {1, 1, 1, 1, 4, 1},
            {-2, -2, -2, 1, 1, 4},
        },
        Rational(1, 3));
}

GramMatrix fixture_m4() {
    return from_ints(
        {
            {2, 1, 0, 0, 0, 0, 0, 1},
            {1, 2, 0, 0, -1, 0, 1, 0},
            {0, 0, 2, 1, -1, -1, 0, -1},
            {0, 0, 1, 2, 0, 0, 1, 0},
            {0, -1, -1, 0, 2, 0, 0, 1},
            {0, 0, -1, 0, 0, 2, 0, 1},
            {0, 1, 0, 1, 0, 0, 2, 0},
            {1, 0, -1, 0, 1, 1, 0, 2},
        },
        Rational(1));
}

GramMatrix fixture_m5() {
    return from_ints(
        {
            {2, 1, 1, 1, 0, 0, 0, 1},
            {1, 2, 0, 1, 1, 1, 0, 1},
            {1, 0, 2, 1, 0, -1, 1, 0},
            {1, 1, 1, 2, 1, 0, 1, 0},
            {0, 1, 0, 1, 2, 0, 1, 0},
            {0, 1, -1, 0, 0, 2, -1, 1},
            {0, 0, 1, 1, 1, -1, 2, -1},
            {1, 1, 0, 0, 0, 1, -1, 2},
        },
        Rational(1));
}

GramMatrix fixture_m10() {
    return from_ints(
        {
            {4, 0, 0, 2, 0, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 1},
            {0, 4, 2, 0, 0, 0, -2, 2, 0, -2, -1, 1, 0, 2, 2, -1},
            {0, 2, 4, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1, 2, 0},
            {2, 0, 0, 4, 2, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 2},
            {0, 0, 0, 2, 4, 0, 0, 2, 2, 0, 0, 1, 0, 0, 0, 0},
            {0, 0, 0, 2, 0, 4, 2, 0, 0, 2, 1, 0, 0, 0, -1, 1},
            {0, -2, 0, 0, 0, 2, 4, 0, 0, 2, 2, 0, 0, -1, -2, 0},
            {0, 2, 0, 0, 2, 0, 0, 4, 1, -1, 0, 2, 0, 1, 0, -2},
            {-2, 0, 0, 0, 2, 0, 0, 1, 4, 0, 0, 2, 0, 0, 0, 0},
            {0, -2, -1, 1, 0, 2, 2, -1, 0, 4, 2, 0, 0, 0, -2, 2},
            {0, -1, 0, 0, 0, 1, 2, 0, 0, 2, 4, 0, 0, 0, 0, 0},
            {0, 1, 0, 0, 1, 0, 0, 2, 2, 0, 0, 4, 2, 2, 0, 0},
            {2, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 2, 4, 0, 0, 2},
            {0, 2, 1, 0, 0, 0, -1, 1, 0, 0, 0, 2, 0, 4, 2, 0},
            {0, 2, 2, 0, 0, -1, -2, 0, 0, -2, 0, 0, 0, 2, 4, 0},
            {1, -1, 0, 2, 0, 1, 0, -2, 0, 2, 0, 0, 2, 0, 0, 4},
        },
        Rational(1));
}

}  // namespace mwl

#include "mwl/derive.hpp"

#include <array>

namespace mwl {

namespace {

MultiPoly V() { return MultiPoly::variable("v"); }
MultiPoly sym(const std::string& s) { return MultiPoly::variable(s); }

bool is_base_surface(const SurfaceModel& s) {
    return (s.a == 2 && s.b == 1) || (s.a == 1 && s.b == 2) || (s.a == 2 && s.b == 2) ||
           (s.a == 1 && s.b == 3) || (s.a == 1 && s.b == 4);
}

SurfaceModel base_of(const SurfaceModel& s) {
    if (is_base_surface(s)) return s;
    SurfaceModel p = birational_partner(s).partner;
    if (is_base_surface(p)) return p;
    throw std::invalid_argument("no derivation pipeline for " + s.name());
}

}  // namespace

Ansatz ansatz_for(const SurfaceModel& s) {
    Ansatz z;
    if (s.a == 2 && s.b == 1) {
        // x = a v + b, y = c v + d; hinted symbols last (c carries the branch)
        z.x_num = sym("a") * V() + sym("b");
        z.y_num = sym("c") * V() + sym("d");
        z.symbols = {"b", "d", "c", "a"};
        z.survivor = "a";
    } else if (s.a == 1 && s.b == 2) {
        // x = a v + 1/u^2, y = c v + 1/u^3
        z.x_num = sym("a") * V() * sym("u").pow(2) + MultiPoly(1);
        z.y_num = sym("c") * V() * sym("u").pow(3) + MultiPoly(1);
        z.x_den_upow = 2;
        z.y_den_upow = 3;
        z.unit = "u";
        z.symbols = {"c", "a", "u"};
        z.survivor = "u";
    } else if (s.a == 2 && s.b == 2) {
        // minimal sections: x = a v + b, y = v^2 + c v + d
        z.x_num = sym("a") * V() + sym("b");
        z.y_num = V().pow(2) + sym("c") * V() + sym("d");
        z.symbols = {"c", "d", "b", "a"};
        z.survivor = "a";
    } else if (s.a == 1 && s.b == 3) {
        // x = a v + b, y = v^2 + d v + e
        z.x_num = sym("a") * V() + sym("b");
        z.y_num = V().pow(2) + sym("d") * V() + sym("e");
        z.symbols = {"d", "e", "b", "a"};
        z.survivor = "a";
    } else if (s.a == 1 && s.b == 4) {
        // x = (v^2 + a v + b)/u^2, y = (v^3 + c v^2 + d v + e)/u^3, U = u^6
        z.x_num = V().pow(2) + sym("a") * V() + sym("b");
        z.y_num = V().pow(3) + sym("c") * V().pow(2) + sym("d") * V() + sym("e");
        z.x_den_upow = 2;
        z.y_den_upow = 3;
        z.unit = "u";
        z.collapse_power = 6;
        z.collapsed_name = "U";
        z.symbols = {"c", "d", "e", "b", "a", "U"};
        z.survivor = "U";
    } else {
        throw std::invalid_argument("ansatz_for: no shape for " + s.name());
    }
    return z;
}

Ansatz fundpoly_ansatz_for(const SurfaceModel& s) {
    if (s.a == 2 && s.b == 2) {
        // the unit-parameterized shape of the reference eliminant
        Ansatz z;
        z.x_num = sym("a") * V() + sym("u").pow(2);
        z.y_num = V().pow(2) + sym("c") * V() + sym("u").pow(3);
        z.unit = "u";
        z.symbols = {"c", "a", "u"};
        z.survivor = "u";
        return z;
    }
    return ansatz_for(s);
}

CoefficientSystem system_for(const SurfaceModel& s) {
    return build_system(s, ansatz_for(s));
}

QPoly fundpoly_for(const SurfaceModel& s) {
    SurfaceModel b = base_of(s);
    Ansatz z = fundpoly_ansatz_for(b);
    CoefficientSystem sys = build_system(b, z);
    return fundamental_polynomial(sys, z.survivor);
}

// ---------------------------------------------------------------------------
// towers

TowerPtr tower_k1() {
    static TowerPtr t = make_cyclotomic(3);
    return t;
}

namespace {
TowerElement sqrt3_in_z12(const TowerPtr& t) {
    // zeta_12 + zeta_12^-1 = 2 cos(pi/6) = sqrt(3)
    TowerElement z = t->gen("z12");
    return z + z.pow(11);
}
}  // namespace

TowerPtr tower_k2() {
    static TowerPtr t = [] {
        TowerPtr z = make_cyclotomic(12);
        TowerElement s3 = sqrt3_in_z12(z);
        TowerElement base1 = TowerElement(3) + s3 * Rational(2);  // 3 + 2 sqrt3
        TowerPtr t1 = z->with_radical("b1", base1, 4);            // positive real branch
        // beta2 = (3 - 2 sqrt3)^(1/4) lies in this field already:
        // beta2 = (sqrt3 - 1)(1 + i)/2 * beta1 (principal branch); checked below
        TowerElement s3t = transport(s3, t1);
        TowerElement i = t1->gen("z12").pow(3);
        TowerElement b2 = (s3t - TowerElement(1)) * (TowerElement(1) + i) * Rational(1, 2) *
                          t1->gen("b1");
        TowerElement rel = b2.pow(4) - (TowerElement(3) - s3t * Rational(2));
        if (!rel.is_zero()) throw std::logic_error("tower_k2: beta2 expression is wrong");
        return t1;
    }();
    return t;
}

// beta2 as an element of tower_k2
TowerElement beta2_elem(const TowerPtr& t) {
    TowerElement s3 = sqrt3_in_z12(t);
    TowerElement i = t->gen("z12").pow(3);
    return (s3 - TowerElement(1)) * (TowerElement(1) + i) * Rational(1, 2) * t->gen("b1");
}

TowerPtr tower_k2_prime() {
    static TowerPtr t = [] {
        TowerPtr z = make_cyclotomic(3);
        return z->with_radical("c2", z->from_rational(Rational(2)), 3);  // real 2^(1/3)
    }();
    return t;
}

std::vector<TowerElement> e13_cubic_roots(const TowerPtr& t) {
    TowerElement z = t->gen("z9");
    auto lam = [&](long k) { return z.pow(k) + z.pow(-k); };
    TowerElement l1 = lam(1), l2 = lam(2), l3 = lam(4);
    TowerElement A1 = -(l1.pow(-6) * l2.pow(-3));
    TowerElement A2 = -(l2.pow(-6) * l3.pow(-3));
    TowerElement A3 = -(l1.pow(-3) * l3.pow(-6));
    return {A1, A2, A3};
}

TowerPtr tower_k3() {
    static TowerPtr t = [] {
        TowerPtr z9 = make_cyclotomic(9);
        TowerElement A1 = e13_cubic_roots(z9)[0];
        return z9->with_radical("r1", A1 * Rational(16), 9);
    }();
    return t;
}

TowerPtr tower_k24() {
    static TowerPtr t = make_cyclotomic(24);
    return t;
}

TowerElement i_in_z24(const TowerPtr& t) { return t->gen("z24").pow(6); }
TowerElement sqrt2_in_z24(const TowerPtr& t) {
    TowerElement z = t->gen("z24");
    return z.pow(3) - z.pow(9);
}
TowerElement sqrt3_in_z24(const TowerPtr& t) {
    TowerElement z = t->gen("z24");
    return z.pow(2) - z.pow(10);
}
TowerElement sqrt6_in_z24(const TowerPtr& t) {
    return sqrt2_in_z24(t) * sqrt3_in_z24(t);
}

// Splitting field of (1,4): Q(zeta24, w) with w = (22 + 9 sqrt6)^(1/6) real
// positive; every minimal-section denominator is a zeta24-integer multiple of
// w, checked at construction.
TowerPtr tower_k4() {
    static TowerPtr t = [] {
        TowerPtr z = tower_k24();
        TowerElement UA = TowerElement(22) + sqrt6_in_z24(z) * Rational(9);
        return z->with_radical("w", UA, 6);
    }();
    return t;
}

// ---------------------------------------------------------------------------
// per-surface bases

namespace {

// (2,1): 12 sections from a^3 = -1, c in {1, -1, i sqrt3, -i sqrt3}
std::vector<Section> minimal_21() {
    TowerPtr t = tower_k1();
    TowerElement z3 = t->gen("z3");
    TowerElement isqrt3 = z3 * Rational(2) + TowerElement(1);  // 2 zeta3 + 1 = i sqrt3
    CoefficientSystem sys = system_for(SurfaceModel(2, 1));
    prepare_elimination(sys, "a");
    std::vector<Section> out;
    std::vector<TowerElement> roots = {TowerElement(-1) + t->zero(), -z3, -(z3 * z3)};
    std::vector<TowerElement> cs = {t->one(), -t->one(), isqrt3, -isqrt3};
    for (const auto& a : roots)
        for (const auto& c : cs)
            out.push_back(section_from_root(sys, a, {{"c", c}}));
    return out;
}

std::vector<Section> basis_21() {
    TowerPtr t = tower_k1();
    TowerElement z3 = t->gen("z3");
    CoefficientSystem sys = system_for(SurfaceModel(2, 1));
    prepare_elimination(sys, "a");
    // Q1 = (-v, v); Q2 = (-zeta3 v, -v): this pair has Gram [[1/3,1/6],[1/6,1/3]]
    Section q1 = section_from_root(sys, TowerElement(-1) + t->zero(), {{"c", t->one()}});
    Section q2 = section_from_root(sys, -z3, {{"c", -t->one()}});
    return {q1, q2};
}

// (1,2): sections indexed by roots u of u^24 - 270 u^12 - 27
std::vector<Section> sections_12(const std::vector<TowerElement>& uroots) {
    CoefficientSystem sys = build_system(SurfaceModel(1, 2), ansatz_for(SurfaceModel(1, 2)));
    prepare_elimination(sys, "u");
    std::vector<Section> out;
    for (const auto& u : uroots) out.push_back(section_from_root(sys, u));
    return out;
}

std::vector<Section> basis_12() {
    TowerPtr t = tower_k2();
    TowerElement z = t->gen("z12");
    TowerElement b1 = t->gen("b1"), b2 = beta2_elem(t);
    TowerElement i = z.pow(3), z3 = z.pow(4);
    // u in {-b1, i b1, -b2, zeta3 b2} reproduces the reference M2 entries
    return sections_12({-b1, i * b1, -b2, z3 * b2});
}

std::vector<Section> minimal_12() {
    TowerPtr t = tower_k2();
    TowerElement z = t->gen("z12");
    TowerElement b1 = t->gen("b1"), b2 = beta2_elem(t);
    std::vector<TowerElement> roots;
    for (int j = 0; j < 12; ++j) {
        roots.push_back(z.pow(j) * b1);
        roots.push_back(z.pow(j) * b2);
    }
    return sections_12(roots);
}

// (2,2) minimal family: a^3 = 2 with y = v^2 + v, a^3 = -2 with y = v^2 - v
std::vector<Section> minimal_22() {
    TowerPtr t = tower_k2_prime();
    TowerElement z3 = t->gen("z3"), c2 = t->gen("c2");
    CoefficientSystem sys = system_for(SurfaceModel(2, 2));
    prepare_elimination(sys, "a");
    std::vector<Section> out;
    for (int j = 0; j < 3; ++j) {
        TowerElement a_plus = c2 * z3.pow(j);
        out.push_back(section_from_root(sys, a_plus));
        out.push_back(section_from_root(sys, a_plus).negate());
        out.push_back(section_from_root(sys, -a_plus));
        out.push_back(section_from_root(sys, -a_plus).negate());
    }
    return out;
}

std::vector<Section> basis_22() {
    TowerPtr t = tower_k2_prime();
    TowerElement z3 = t->gen("z3"), c2 = t->gen("c2");
    CoefficientSystem sys = system_for(SurfaceModel(2, 2));
    prepare_elimination(sys, "a");
    Section s1 = section_from_root(sys, c2);
    Section s2 = section_from_root(sys, c2 * z3).negate();
    Section t1 = section_from_root(sys, -c2);
    Section t2 = section_from_root(sys, -(c2 * z3)).negate();
    return {s1, s2, t1, t2};
}

// (1,3): the six roots zeta_9^l (16 A_1)^(1/9), l = 0..5
std::vector<Section> sections_13(int count) {
    TowerPtr t = tower_k3();
    TowerElement z9 = t->gen("z9"), r1 = t->gen("r1");
    CoefficientSystem sys = system_for(SurfaceModel(1, 3));
    prepare_elimination(sys, "a");
    std::vector<Section> out;
    for (int l = 0; l < count; ++l)
        out.push_back(section_from_root(sys, z9.pow(l) * r1));
    return out;
}

std::vector<Section> basis_13() { return sections_13(6); }

// u = (coeffs in zeta24) * w, principal 6th root of U; coefficients found by
// integer-relation search and certified here by u^6 = U.
struct E14Choice {
    TowerElement U;  // in Q(zeta24)
    TowerElement u;  // principal root, in Q(zeta24, w)
    int twist;       // basis member is zeta6^twist * u
};

std::vector<E14Choice> e14_choices() {
    TowerPtr t24 = tower_k24();
    TowerPtr t = tower_k4();
    TowerElement i = i_in_z24(t24), s2 = sqrt2_in_z24(t24), s3 = sqrt3_in_z24(t24),
                 s6 = sqrt6_in_z24(t24);
    TowerElement UA = TowerElement(22) + s6 * Rational(9);
    TowerElement UD = s2 * (s3 * Rational(3) - TowerElement(5)) * Rational(2);
    TowerElement UC1 = -(i * (s6 * Rational(9) + TowerElement(22)));
    TowerElement UC2 = i * (TowerElement(22) - s6 * Rational(9));
    TowerElement UG = (s3 * Rational(3) + TowerElement(5)) *
                      (s2 * Rational(7) + TowerElement(10)) * (TowerElement(1) - i) *
                      Rational(1, 2);
    TowerElement w = t->gen("w");
    TowerElement z = t->gen("z24");
    auto zp = [&](int k) { return z.pow(k); };
    auto mk = [&](const TowerElement& U, const TowerElement& c, int twist) {
        TowerElement u = c * w;
        if (!(u.pow(6) - transport(U, t)).is_zero())
            throw std::logic_error("e14_choices: u expression does not satisfy u^6 = U");
        return E14Choice{U, u, twist};
    };
    TowerElement one = t->one();
    std::vector<E14Choice> out;
    out.push_back(mk(UA, one, 0));
    out.push_back(mk(UA, one, 1));
    TowerElement cD = zp(7) - zp(5) + one;
    out.push_back(mk(UD, cD, 0));
    out.push_back(mk(UD, cD, 1));
    out.push_back(mk(UC1, zp(3) - zp(7), 4));
    out.push_back(mk(UC2, -zp(5) + zp(4) - zp(2) + z * Rational(2) - one, 1));
    out.push_back(mk(UG, -zp(4) + zp(3) + one, 2));
    out.push_back(mk(-UD, -zp(7) + zp(5) + zp(2) - z, 5));
    return out;
}

std::vector<Section> basis_14() {
    TowerPtr t24 = tower_k24();
    TowerPtr t = tower_k4();
    CoefficientSystem sys = system_for(SurfaceModel(1, 4));
    prepare_elimination(sys, "U");
    std::vector<Section> out;
    TowerElement zeta6 = t->gen("z24").pow(4);
    for (const auto& ch : e14_choices()) {
        // coefficients live in Q(zeta24); solve there, then move to the big tower
        auto asg = back_substitute(sys, "U", transport(ch.U, t24));
        std::map<std::string, TowerElement> big;
        for (const auto& [k, v] : asg) big[k] = transport(v, t);
        TowerElement u = zeta6.pow(ch.twist) * ch.u;
        Section q = section_from_assignment(sys, big, u);
        if (!verify_section(q))
            throw std::runtime_error("basis_14: section fails verification");
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

std::vector<Section> derive_minimal_sections(const SurfaceModel& s) {
    if (s.a == 2 && s.b == 1) return minimal_21();
    if (s.a == 1 && s.b == 2) return minimal_12();
    if (s.a == 2 && s.b == 2) return minimal_22();
    if (s.a == 1 && s.b == 3) return sections_13(9);
    throw std::invalid_argument("derive_minimal_sections: unsupported " + s.name());
}

DerivedBasis derive_basis(const SurfaceModel& s) {
    DerivedBasis out;
    out.surface = s;
    if (is_base_surface(s)) {
        if (s.a == 2 && s.b == 1) out.sections = basis_21();
        else if (s.a == 1 && s.b == 2) out.sections = basis_12();
        else if (s.a == 2 && s.b == 2) out.sections = basis_22();
        else if (s.a == 1 && s.b == 3) out.sections = basis_13();
        else out.sections = basis_14();
        return out;
    }
    SurfaceModel b = base_of(s);
    for (const auto& q : derive_basis(b).sections) out.sections.push_back(apply_partner_map(q));
    return out;
}

}  // namespace mwl

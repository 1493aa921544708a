#include "mwl/section.hpp"

namespace mwl {

TLaurent surface_rhs(const SurfaceModel& s) {
    if (s.is_master())
        return TLaurent::monomial(TowerElement(1), 360) + TLaurent(TowerElement(1));
    return TLaurent::monomial(TowerElement(1), s.a + s.b) +
           TLaurent::monomial(TowerElement(1), s.a);
}

bool verify_section(const Section& q) {
    TLaurent lhs = q.y * q.y - q.x * q.x * q.x - surface_rhs(q.surface);
    return lhs.reduces_to_zero();
}

Section apply_partner_map(const Section& q) {
    if (q.surface.is_master())
        throw std::invalid_argument("apply_partner_map: master surface has no partner");
    int n = q.surface.n();
    if (!q.x.is_zero() && (q.x.min_exp() < 0 || q.x.max_exp() > 2 * n))
        throw std::domain_error("apply_partner_map: x exponents outside 0..2n");
    if (!q.y.is_zero() && (q.y.min_exp() < 0 || q.y.max_exp() > 3 * n))
        throw std::domain_error("apply_partner_map: y exponents outside 0..3n");
    Section out;
    out.surface = birational_partner(q.surface).partner;
    out.tower = q.tower;
    out.provenance = "transformed";
    for (const auto& [e, c] : q.x.terms()) out.x = out.x + TLaurent::monomial(c, 2 * n - e);
    for (const auto& [e, c] : q.y.terms()) out.y = out.y + TLaurent::monomial(c, 3 * n - e);
    return out;
}

bool same_section(const Section& p, const Section& q) {
    if (!(p.surface == q.surface)) return false;
    return (p.x - q.x).reduces_to_zero() && (p.y - q.y).reduces_to_zero();
}

namespace {

// Rational function in v over the tower; no gcd normalization, the degrees
// involved in chord-tangent sums are tiny.
struct RF {
    TPoly num, den;

    static RF from_laurent(const TLaurent& p) {
        if (p.is_zero()) return {TPoly(), TPoly(std::vector<TowerElement>{TowerElement(1)})};
        int m = std::min(0, p.min_exp());
        TLaurent shifted = p.shift(-m);
        return {shifted.to_poly(),
                TPoly(std::vector<TowerElement>{TowerElement(1)}).shift_up(-m)};
    }
    RF operator+(const RF& o) const { return {num * o.den + o.num * den, den * o.den}; }
    RF operator-(const RF& o) const { return {num * o.den - o.num * den, den * o.den}; }
    RF operator*(const RF& o) const { return {num * o.num, den * o.den}; }
    RF operator/(const RF& o) const {
        if (o.num.is_zero()) throw std::domain_error("RF: division by zero");
        return {num * o.den, den * o.num};
    }
    // convert to a Laurent polynomial if den | num * v^k exactly
    std::optional<TLaurent> to_laurent() const {
        if (num.is_zero()) return TLaurent();
        TPoly n = num, d = den;
        int shift = d.val_at_zero();
        d = d.shift_down(shift);
        auto [quot, rem] = divrem(n, d);
        if (!rem.is_zero()) return std::nullopt;
        return TLaurent::from_poly(quot, -shift);
    }
};

}  // namespace

std::optional<Section> add_sections(const Section& p, const Section& q) {
    if (!(p.surface == q.surface))
        throw std::invalid_argument("add_sections: different surfaces");
    RF x1 = RF::from_laurent(p.x), y1 = RF::from_laurent(p.y);
    RF x2 = RF::from_laurent(q.x), y2 = RF::from_laurent(q.y);
    bool same_x = (p.x - q.x).reduces_to_zero();
    RF lambda{TPoly(), TPoly(std::vector<TowerElement>{TowerElement(1)})};
    if (same_x) {
        if ((p.y + q.y).reduces_to_zero()) return std::nullopt;  // P + (-P) = O
        // tangent: 3x^2 / 2y
        RF three{TPoly(std::vector<TowerElement>{TowerElement(3)}),
                 TPoly(std::vector<TowerElement>{TowerElement(1)})};
        RF two{TPoly(std::vector<TowerElement>{TowerElement(2)}),
               TPoly(std::vector<TowerElement>{TowerElement(1)})};
        lambda = three * x1 * x1 / (two * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    RF x3 = lambda * lambda - x1 - x2;
    RF y3 = lambda * (x1 - x3) - y1;
    auto lx = x3.to_laurent();
    auto ly = y3.to_laurent();
    if (!lx || !ly) return std::nullopt;
    Section out;
    out.surface = p.surface;
    out.tower = p.tower ? p.tower : q.tower;
    out.x = *lx;
    out.y = *ly;
    out.provenance = "transformed";
    if (!verify_section(out)) return std::nullopt;
    return out;
}

}  // namespace mwl

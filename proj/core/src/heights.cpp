#include "mwl/heights.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mwl {

bool GramMatrix::symmetric() const {
    for (size_t i = 0; i < entries.size(); ++i)
        for (size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i][j] != entries[j][i]) return false;
    return true;
}

Rational bareiss_det(std::vector<std::vector<Rational>> m) {
    size_t n = m.size();
    if (n == 0) return Rational(1);
    Rational sign(1), prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return Rational(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational det(const GramMatrix& g) { return bareiss_det(g.entries); }

bool positive_definite(const GramMatrix& g) {
    for (int k = 1; k <= g.rank(); ++k) {
        std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = g.entries[i][j];
        if (bareiss_det(minor).sign() <= 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

namespace {

// extend `base` with the levels of `other` that it lacks; matching names must
// carry identical relations
TowerPtr union_tower(TowerPtr base, const TowerPtr& other) {
    if (!other) return base;
    if (!base) return other;
    for (const auto& l : other->levels()) {
        int i = base->level_index(l.name);
        if (i < 0) {
            base = base->with_level(l);
        } else {
            const auto& bl = base->levels()[i];
            if (bl.degree != l.degree)
                throw TowerMismatch("union_tower: degree mismatch at " + l.name);
            for (int j = 0; j <= l.degree; ++j)
                if (!(bl.minpoly[j] - l.minpoly[j]).is_zero())
                    throw TowerMismatch("union_tower: relation mismatch at " + l.name);
        }
    }
    return base;
}

TLaurent transport_laurent(const TLaurent& p, const TowerPtr& target) {
    TLaurent out;
    for (const auto& [e, c] : p.terms())
        out = out + TLaurent::monomial(TowerElement(target, c.rep()), e);
    return out;
}

// polynomial coordinates (after the constant tower denominators): exponents
// within [0, 2n] and [0, 3n]
void check_polynomial_coords(const Section& q) {
    if (q.surface.is_master())
        throw std::invalid_argument("heights: master-surface points are paired by scaling");
    int n = q.surface.n();
    if (q.x.is_zero() || q.y.is_zero())
        throw std::invalid_argument("heights: zero coordinate");
    if (q.x.min_exp() < 0 || q.x.max_exp() > 2 * n || q.y.min_exp() < 0 ||
        q.y.max_exp() > 3 * n)
        throw std::invalid_argument("heights: coordinates not polynomial of bounded degree");
}

TPoly to_tpoly(const TLaurent& p) { return p.to_poly(); }

// w^(2n) x(1/w) and w^(3n) y(1/w)
TPoly infinity_chart(const TLaurent& p, int bound) {
    std::vector<TowerElement> cs(bound + 1, TowerElement(0));
    for (const auto& [e, c] : p.terms()) cs[bound - e] = c;
    return TPoly(std::move(cs));
}

// multiplicity of v=0 as a root (semantic zero tests)
int val0(const TPoly& p) {
    if (p.is_zero()) return 1 << 20;
    int v = 0;
    for (const auto& c : p.coeffs()) {
        if (!c.is_zero()) return v;
        ++v;
    }
    return 1 << 20;
}

struct PlaceData {
    int order = 0;           // vanishing order of B at the place (0: no fiber)
    bool p_through = false;  // section passes through the singular point
    bool q_through = false;
    TowerElement p_label, q_label;  // component label when through
};

// local analysis at v=0 of the given chart (order k fiber of y^2 = x^3 + s^k unit)
PlaceData analyze(int order, const TPoly& px, const TPoly& py, const TPoly& qx,
                  const TPoly& qy) {
    PlaceData d;
    d.order = order;
    if (order < 2) return d;
    int need = order >= 4 ? 2 : 1;
    auto through = [&](const TPoly& x, const TPoly& y) {
        return val0(x) >= need && val0(y) >= need;
    };
    d.p_through = through(px, py);
    d.q_through = through(qx, qy);
    if (order == 2) {  // IV: branches y ~ +-s sqrt(unit)
        d.p_label = py.coeff(1);
        d.q_label = qy.coeff(1);
    } else if (order == 3) {  // I0*: far components by x/s among roots of xi^3+unit(0)
        d.p_label = px.coeff(1);
        d.q_label = qx.coeff(1);
    } else {  // IV*
        d.p_label = py.coeff(2);
        d.q_label = qy.coeff(2);
    }
    return d;
}

Rational contr_value(const PlaceData& d, bool self) {
    if (d.order < 2 || !d.p_through || !d.q_through) return Rational(0);
    Rational same, diff;
    switch (d.order) {
        case 2: same = Rational(2, 3); diff = Rational(1, 3); break;
        case 3: same = Rational(1); diff = Rational(1, 2); break;
        default: same = Rational(4, 3); diff = Rational(2, 3); break;
    }
    if (self) return same;
    return (d.p_label - d.q_label).is_zero() ? same : diff;
}

}  // namespace

std::pair<Section, Section> to_common_tower(const Section& p, const Section& q) {
    if (p.tower == q.tower) return {p, q};
    TowerPtr t = union_tower(p.tower, q.tower);
    Section P = p, Q = q;
    P.tower = t;
    Q.tower = t;
    P.x = transport_laurent(p.x, t);
    P.y = transport_laurent(p.y, t);
    Q.x = transport_laurent(q.x, t);
    Q.y = transport_laurent(q.y, t);
    return {P, Q};
}

int intersection_number(const Section& p0, const Section& q0) {
    check_polynomial_coords(p0);
    check_polynomial_coords(q0);
    if (!(p0.surface == q0.surface))
        throw std::invalid_argument("intersection_number: different surfaces");
    auto [p, q] = to_common_tower(p0, q0);
    if (same_section(p, q)) throw std::invalid_argument("intersection_number: identical sections");

    const SurfaceModel& s = p.surface;
    int n = s.n();
    TPoly xd = to_tpoly(p.x) - to_tpoly(q.x);
    TPoly yd = to_tpoly(p.y) - to_tpoly(q.y);
    TPoly D = gcd_poly(xd, yd);  // gcd(0, g) = monic(g)

    int total = 0;
    int degD = D.is_zero() ? 0 : D.degree_checked();
    int v0 = D.is_zero() ? 0 : std::min(val0(D), degD);
    total += degD - v0;  // intersections away from v=0 are at smooth fibers

    // v = 0
    if (v0 > 0) {
        PlaceData d = analyze(s.a, to_tpoly(p.x), to_tpoly(p.y), to_tpoly(q.x), to_tpoly(q.y));
        if (d.order >= 2 && d.p_through && d.q_through)
            total += std::max(0, v0 - (d.order - 1));
        else
            total += v0;
    }
    // v = infinity
    TPoly PX = infinity_chart(p.x, 2 * n), PY = infinity_chart(p.y, 3 * n);
    TPoly QX = infinity_chart(q.x, 2 * n), QY = infinity_chart(q.y, 3 * n);
    int minf = std::min(val0(PX - QX), val0(PY - QY));
    if (minf > 0) {
        int ap = s.a_partner();
        PlaceData d = analyze(ap, PX, PY, QX, QY);
        if (d.order >= 2 && d.p_through && d.q_through)
            total += std::max(0, minf - (d.order - 1));
        else
            total += minf;
    }
    return total;
}

Rational local_contribution(const Section& p0, const Section& q0, const FiberInfo& fiber) {
    auto [p, q] = to_common_tower(p0, q0);
    bool self = same_section(p, q);
    int n = p.surface.n();
    if (fiber.place == FiberInfo::Place::RootOfUnity) return Rational(0);
    PlaceData d;
    if (fiber.place == FiberInfo::Place::Zero) {
        d = analyze(fiber.vanishing_order, to_tpoly(p.x), to_tpoly(p.y), to_tpoly(q.x),
                    to_tpoly(q.y));
    } else {
        d = analyze(fiber.vanishing_order, infinity_chart(p.x, 2 * n), infinity_chart(p.y, 3 * n),
                    infinity_chart(q.x, 2 * n), infinity_chart(q.y, 3 * n));
    }
    return contr_value(d, self);
}

Rational height_pairing(const Section& p0, const Section& q0) {
    check_polynomial_coords(p0);
    check_polynomial_coords(q0);
    auto [p, q] = to_common_tower(p0, q0);
    Rational chi(p.surface.chi());
    Rational acc;
    bool self = same_section(p, q);
    // (P.O) = 0: polynomial coordinates of bounded degree never meet the zero
    // section (checked by check_polynomial_coords)
    if (self) {
        acc = Rational(2) * chi;
    } else {
        acc = chi - Rational(intersection_number(p, q));
    }
    for (const auto& f : classify_fibers(p.surface)) acc -= local_contribution(p, q, f);
    return acc;
}

GramMatrix gram(const std::vector<Section>& basis) {
    GramMatrix g;
    size_t k = basis.size();
    g.entries.assign(k, std::vector<Rational>(k));
    for (size_t i = 0; i < k; ++i) {
        g.entries[i][i] = height_pairing(basis[i], basis[i]);
        for (size_t j = i + 1; j < k; ++j)
            g.entries[i][j] = g.entries[j][i] = height_pairing(basis[i], basis[j]);
    }
    return g;
}

std::vector<int> find_generator_subset(const std::vector<Section>& candidates,
                                       const Rational& target_det, int size) {
    int n = static_cast<int>(candidates.size());
    if (size > n) throw std::invalid_argument("find_generator_subset: size exceeds candidates");
    // canonical order: lexicographic on embedding real/imaginary parts of the
    // coordinate coefficients
    std::vector<std::pair<std::vector<double>, int>> keys;
    for (int i = 0; i < n; ++i) {
        std::vector<double> key;
        for (const auto& [e, c] : candidates[i].x.terms()) {
            CBall b = c.embed(64);
            key.push_back(b.re_d());
            key.push_back(b.im_d());
        }
        for (const auto& [e, c] : candidates[i].y.terms()) {
            CBall b = c.embed(64);
            key.push_back(b.re_d());
            key.push_back(b.im_d());
        }
        keys.push_back({std::move(key), i});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int> order;
    for (const auto& [k, i] : keys) order.push_back(i);

    // pairing cache
    std::map<std::pair<int, int>, Rational> cache;
    auto pairing = [&](int i, int j) {
        auto key = std::minmax(i, j);
        auto it = cache.find({key.first, key.second});
        if (it != cache.end()) return it->second;
        Rational v = height_pairing(candidates[key.first], candidates[key.second]);
        cache[{key.first, key.second}] = v;
        return v;
    };

    std::vector<int> chosen;
    std::function<bool(int)> dfs = [&](int start) -> bool {
        if (static_cast<int>(chosen.size()) == size) {
            GramMatrix g;
            g.entries.assign(size, std::vector<Rational>(size));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) g.entries[i][j] = pairing(chosen[i], chosen[j]);
            return det(g) == target_det;
        }
        for (int oi = start; oi < n; ++oi) {
            int c = order[oi];
            chosen.push_back(c);
            int k = static_cast<int>(chosen.size());
            GramMatrix g;
            g.entries.assign(k, std::vector<Rational>(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) g.entries[i][j] = pairing(chosen[i], chosen[j]);
            if (positive_definite(g) && dfs(oi + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0)) throw std::runtime_error("find_generator_subset: no subset found");
    return chosen;
}

}  // namespace mwl

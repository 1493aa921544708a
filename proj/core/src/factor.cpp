#include "mwl/factor.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mwl {

std::vector<std::pair<QPoly, int>> squarefree_decomposition(QPoly p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    p = p.monic();
    if (p.degree_checked() == 0) return out;
    QPoly d = gcd_poly(p, p.derivative());
    QPoly e = divrem(p, d).first;
    int i = 1;
    while (!e.is_zero() && e.degree_checked() > 0) {
        QPoly y = gcd_poly(e, d);
        QPoly fi = divrem(e, y).first;
        if (fi.degree_checked() > 0) out.push_back({fi, i});
        e = y;
        d = divrem(d, y).first;
        ++i;
    }
    return out;
}

QPoly squarefree_part(const QPoly& p) {
    QPoly out = QPoly::one();
    for (const auto& [g, m] : squarefree_decomposition(p)) out = out * g;
    return out;
}

QPoly Factorization::product() const {
    QPoly out = QPoly::constant(unit);
    for (const auto& f : factors)
        for (int i = 0; i < f.multiplicity; ++i) out = out * f.poly;
    return out;
}

bool verify_factorization(const QPoly& p, const Rational& unit,
                          const std::vector<std::pair<QPoly, int>>& factors) {
    QPoly prod = QPoly::constant(unit);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) prod = prod * f;
    return prod == p;
}

std::pair<QPoly, int> detect_substitution(const QPoly& p) {
    int k = p.deflation_index();
    if (k <= 1) return {p, k};
    return {p.deflate(k), k};
}

QPoly to_primitive_integer(const QPoly& p) {
    if (p.is_zero()) return p;
    QPoly q = primitive_part(p);
    if (q.lc().sign() < 0) q = -q;
    return q;
}

namespace {

// All divisors of |n| built from a trial-division factorization; empty when
// the factorization fails or there are too many.
std::vector<Integer> divisors_of(const Integer& n, size_t cap = 20000) {
    std::map<Integer, int> fac;
    try {
        fac = factor_integer(n < 0 ? Integer(-n) : n);
    } catch (const std::exception&) {
        return {};
    }
    std::vector<Integer> ds{1};
    for (const auto& [prime, e] : fac) {
        if (prime == 1 || prime == -1) continue;
        size_t base = ds.size();
        Integer pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= prime;
            for (size_t j = 0; j < base; ++j) {
                ds.push_back(ds[j] * pk);
                if (ds.size() > cap) return {};
            }
        }
    }
    return ds;
}

// Rational roots of a squarefree monic rational polynomial, with quotient.
// `complete` reports whether the candidate search was exhaustive.
std::vector<Rational> extract_rational_roots(QPoly& g, bool& complete) {
    std::vector<Rational> roots;
    complete = true;
    if (g.degree_checked() == 0) return roots;
    QPoly G = to_primitive_integer(g);
    Integer a0 = G.coeff(0).numerator();
    Integer an = G.lc().numerator();
    if (a0 == 0) {
        roots.push_back(Rational(0));
        g = divrem(g, QPoly(std::vector<Rational>{Rational(0), Rational(1)})).first;
        auto more = extract_rational_roots(g, complete);
        roots.insert(roots.end(), more.begin(), more.end());
        return roots;
    }
    auto ps = divisors_of(a0);
    auto qs = divisors_of(an);
    if (ps.empty() || qs.empty()) {
        complete = false;
        return roots;
    }
    for (const Integer& p : ps) {
        for (const Integer& q : qs) {
            for (int s : {1, -1}) {
                Rational r(s * p, q);
                if (!g.eval_r(r).is_zero()) continue;
                roots.push_back(r);
                g = divrem(g, QPoly(std::vector<Rational>{-r, Rational(1)})).first;
                if (g.degree_checked() == 0) return roots;
            }
        }
    }
    return roots;
}

bool is_square(const Rational& r, Rational& root) {
    if (r.sign() < 0) return false;
    Integer n = r.numerator(), d = r.denominator();
    Integer sn, sd;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    root = Rational(sn, sd);
    return true;
}

bool eisenstein_applies(const QPoly& p) {
    QPoly G = to_primitive_integer(p);
    if (G.degree_checked() < 2) return false;
    Integer lower_gcd = 0;
    for (int i = 0; i < G.degree_checked(); ++i)
        lower_gcd = gcd(lower_gcd, G.coeff(i).numerator());
    if (lower_gcd == 0) return false;
    std::map<Integer, int> fac;
    try {
        fac = factor_integer(lower_gcd);
    } catch (const std::exception&) {
        return false;
    }
    Integer a0 = G.coeff(0).numerator();
    Integer an = G.lc().numerator();
    for (const auto& [prime, e] : fac) {
        if (prime <= 1) continue;
        if (an % prime == 0) continue;
        if ((a0 / prime) % prime == 0) continue;  // p^2 | a0
        return true;
    }
    return false;
}

enum class SplitResult { Split, NoSplit, Unknown };

// Factor a monic squarefree quartic with no rational roots into two monic
// rational quadratics, if possible.
SplitResult split_quartic(const QPoly& g, QPoly& f1, QPoly& f2) {
    Rational a = g.coeff(3), b = g.coeff(2), c = g.coeff(1), d = g.coeff(0);
    // resolvent cubic in y = beta + delta
    QPoly res(std::vector<Rational>{-(a * a * d - Rational(4) * b * d + c * c),
                                    a * c - Rational(4) * d, -b, Rational(1)});
    QPoly tmp = squarefree_part(res);
    bool ycomplete = true;
    auto ys = extract_rational_roots(tmp, ycomplete);
    for (const Rational& y : ys) {
        Rational d1 = a * a - Rational(4) * (b - y), sd1;
        if (!is_square(d1, sd1)) continue;
        Rational alpha = (a + sd1) / Rational(2);
        Rational gamma = (a - sd1) / Rational(2);
        Rational beta, delta;
        if (alpha != gamma) {
            // beta + delta = y, alpha*delta + beta*gamma = c
            delta = (c - gamma * y) / (alpha - gamma);
            beta = y - delta;
        } else {
            Rational d2 = y * y - Rational(4) * d, sd2;
            if (!is_square(d2, sd2)) continue;
            beta = (y + sd2) / Rational(2);
            delta = (y - sd2) / Rational(2);
        }
        QPoly q1(std::vector<Rational>{beta, alpha, Rational(1)});
        QPoly q2(std::vector<Rational>{delta, gamma, Rational(1)});
        if (q1 * q2 == g) {
            f1 = q1;
            f2 = q2;
            return SplitResult::Split;
        }
    }
    return ycomplete ? SplitResult::NoSplit : SplitResult::Unknown;
}

void split_squarefree(QPoly g, int mult, bool allow_deflate, std::vector<Factor>& out);

// Handle a monic squarefree polynomial whose rational roots were extracted
// exhaustively iff roots_complete.
void split_core(QPoly g, int mult, bool allow_deflate, bool roots_complete,
                std::vector<Factor>& out) {
    int deg = g.degree_checked();
    if (deg == 0) return;
    if (deg == 1) {
        out.push_back({g, mult, FactorStatus::ProvenIrreducible});
        return;
    }
    if (deg <= 3) {
        // without rational roots, quadratics and cubics are irreducible
        out.push_back({g, mult,
                       roots_complete ? FactorStatus::ProvenIrreducible
                                      : FactorStatus::Unresolved});
        return;
    }
    if (deg == 4) {
        QPoly f1, f2;
        SplitResult r = split_quartic(g, f1, f2);
        if (r == SplitResult::Split) {
            out.push_back({f1, mult, FactorStatus::ProvenIrreducible});
            out.push_back({f2, mult, FactorStatus::ProvenIrreducible});
        } else {
            bool proven = roots_complete && r == SplitResult::NoSplit;
            out.push_back({g, mult,
                           proven ? FactorStatus::ProvenIrreducible
                                  : FactorStatus::Unresolved});
        }
        return;
    }
    if (allow_deflate) {
        auto [psi, k] = detect_substitution(g);
        if (k > 1) {
            std::vector<Factor> sub;
            split_squarefree(psi, mult, true, sub);
            for (const auto& f : sub) {
                QPoly h = f.poly.inflate(k);
                split_squarefree(h, f.multiplicity, false, out);
            }
            return;
        }
    }
    out.push_back({g, mult,
                   eisenstein_applies(g) ? FactorStatus::ProvenIrreducible
                                         : FactorStatus::Unresolved});
}

void split_squarefree(QPoly g, int mult, bool allow_deflate, std::vector<Factor>& out) {
    g = g.monic();
    if (g.degree_checked() == 0) return;
    bool complete = true;
    auto roots = extract_rational_roots(g, complete);
    for (const Rational& r : roots)
        out.push_back({QPoly(std::vector<Rational>{-r, Rational(1)}), mult,
                       FactorStatus::ProvenIrreducible});
    if (g.degree_checked() == 0) return;
    if (!roots.empty()) allow_deflate = true;  // degree dropped strictly
    split_core(std::move(g), mult, allow_deflate, complete, out);
}

}  // namespace

Factorization structured_factor(const QPoly& p) {
    if (p.is_zero()) throw std::domain_error("structured_factor: zero polynomial");
    Factorization out;
    out.unit = p.lc();
    for (const auto& [g, m] : squarefree_decomposition(p))
        split_squarefree(g, m, true, out.factors);
    std::sort(out.factors.begin(), out.factors.end(), [](const Factor& a, const Factor& b) {
        if (a.poly.degree_checked() != b.poly.degree_checked())
            return a.poly.degree_checked() < b.poly.degree_checked();
        for (int i = a.poly.degree_checked(); i >= 0; --i) {
            if (a.poly.coeff(i) != b.poly.coeff(i)) return a.poly.coeff(i) < b.poly.coeff(i);
        }
        return false;
    });
    return out;
}

bool proves_irreducible(const QPoly& monic_p) {
    auto f = structured_factor(monic_p);
    return f.factors.size() == 1 && f.factors[0].multiplicity == 1 &&
           f.factors[0].status == FactorStatus::ProvenIrreducible &&
           f.factors[0].poly == monic_p.monic();
}

}  // namespace mwl

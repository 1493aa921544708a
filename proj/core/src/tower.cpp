#include "mwl/tower.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mwl/factor.hpp"

namespace mwl {

namespace {
const mpfr_prec_t kPrecLadder[] = {64, 256, 1024, 4096};
const mpfr_prec_t kBranchPrec = 192;
long g_min_embed_prec = 64;
}  // namespace

void set_min_embed_precision(long bits) {
    g_min_embed_prec = std::clamp(bits, 64L, 4096L);
}
long min_embed_precision() { return g_min_embed_prec; }

QPoly cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    static std::map<long, QPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Rational> xn(n + 1);
    xn[0] = Rational(-1);
    xn[n] = Rational(1);
    QPoly p(std::move(xn));
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        p = divrem(p, cyclotomic_polynomial(d)).first;
    }
    cache[n] = p;
    return p;
}

TowerPtr FieldTower::rationals() {
    return std::make_shared<FieldTower>();
}

long FieldTower::total_degree() const {
    long d = 1;
    for (const auto& l : levels_) d *= l.degree;
    return d;
}

bool FieldTower::all_verified() const {
    return std::all_of(levels_.begin(), levels_.end(),
                       [](const TowerLevel& l) { return l.irreducible_verified; });
}

int FieldTower::level_index(const std::string& name) const {
    for (size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].name == name) return static_cast<int>(i);
    return -1;
}

std::vector<std::string> FieldTower::gen_names() const {
    std::vector<std::string> out;
    for (const auto& l : levels_) out.push_back(l.name);
    return out;
}

MultiPoly FieldTower::level_minpoly(int i) const {
    const auto& l = levels_[i];
    MultiPoly g = MultiPoly::variable(l.name);
    MultiPoly acc;
    for (int j = l.degree; j >= 0; --j) acc = acc * g + l.minpoly[j];
    return acc;
}

MultiPoly FieldTower::reduce(MultiPoly p) const {
    // one top-down pass; level i rewriting introduces only lower generators
    for (int i = static_cast<int>(levels_.size()) - 1; i >= 0; --i) {
        const auto& l = levels_[i];
        int d = p.degree(l.name);
        if (d < l.degree) continue;
        MultiPoly g = MultiPoly::variable(l.name);
        // head = -(m_0 + ... + m_{d-1} g^{d-1}), so g^deg == head
        MultiPoly head;
        for (int j = l.degree - 1; j >= 0; --j) head = head * g - l.minpoly[j];
        while (d >= l.degree) {
            MultiPoly lead = p.coeff_of(l.name, d);  // no l.name inside
            MultiPoly gpow(Rational(1));
            for (int k = 0; k < d - l.degree; ++k) gpow = gpow * g;
            p -= lead * gpow * g.pow(l.degree);
            p += lead * gpow * head;
            d = p.degree(l.name);
        }
    }
    return p;
}

TowerElement FieldTower::zero() const { return from_rational(Rational(0)); }
TowerElement FieldTower::one() const { return from_rational(Rational(1)); }

TowerElement FieldTower::from_rational(const Rational& q) const {
    return TowerElement(shared_from_this(), MultiPoly(q));
}

TowerElement FieldTower::gen(const std::string& name) const {
    if (level_index(name) < 0) throw TowerMismatch("no generator named " + name);
    return TowerElement(shared_from_this(), MultiPoly::variable(name));
}

TowerElement FieldTower::gen_pow(const std::string& name, long e) const {
    TowerElement g = gen(name);
    return g.pow(e);
}

TowerElement FieldTower::element(const MultiPoly& rep) const {
    return TowerElement(shared_from_this(), rep);
}

std::vector<CBall> FieldTower::generator_balls(mpfr_prec_t prec) const {
    std::vector<CBall> out;
    for (const auto& l : levels_) {
        switch (l.kind) {
            case TowerLevel::Kind::Cyclotomic:
                out.push_back(CBall::root_of_unity(1, l.cyc_n, prec));
                break;
            case TowerLevel::Kind::Radical: {
                // evaluate the base over the lower generators, take the k-th
                // root on the branch recorded at construction time
                CBall base(prec);
                {
                    // Horner over terms of rad_base
                    const MultiPoly& bp = l.rad_base;
                    CBall acc(prec);
                    for (const auto& [e, c] : bp.terms()) {
                        CBall t = CBall::from_rational(c, prec);
                        for (size_t vi = 0; vi < bp.vars().size(); ++vi) {
                            if (e[vi] == 0) continue;
                            int li = level_index(bp.vars()[vi]);
                            t = t * out[li].pow_ui(e[vi]);
                        }
                        acc = acc + t;
                    }
                    base = acc;
                }
                CBall root = base.principal_root(l.rad_k);
                CBall best = root;
                double bestd = l.embedding.dist_upper(root);
                for (int j = 1; j < l.rad_k; ++j) {
                    CBall cand = root * CBall::root_of_unity(j, l.rad_k, prec);
                    double d = l.embedding.dist_upper(cand);
                    if (d < bestd) {
                        bestd = d;
                        best = cand;
                    }
                }
                out.push_back(best);
                break;
            }
            case TowerLevel::Kind::Generic: {
                // Newton refinement from the stored isolating ball; the final
                // enclosure radius comes from |f(c)| / lower|f'(c)|.
                CBall z = l.embedding.at_precision(prec);
                std::vector<CBall> cs;
                for (const auto& cp : l.minpoly) {
                    CBall acc(prec);
                    for (const auto& [e, c] : cp.terms()) {
                        CBall t = CBall::from_rational(c, prec);
                        for (size_t vi = 0; vi < cp.vars().size(); ++vi) {
                            if (e[vi] == 0) continue;
                            int li = level_index(cp.vars()[vi]);
                            t = t * out[li].pow_ui(e[vi]);
                        }
                        acc = acc + t;
                    }
                    cs.push_back(acc);
                }
                auto evalp = [&](const CBall& w, bool deriv) {
                    CBall acc(prec);
                    if (!deriv) {
                        for (int j = static_cast<int>(cs.size()) - 1; j >= 0; --j)
                            acc = acc * w + cs[j];
                    } else {
                        for (int j = static_cast<int>(cs.size()) - 1; j >= 1; --j)
                            acc = acc * w + cs[j] * CBall(Rational(j), Rational(0), prec);
                    }
                    return acc;
                };
                long steps = 4 + static_cast<long>(prec / 8);
                for (long s = 0; s < steps; ++s) {
                    CBall mid = z.midpoint();
                    CBall dz = evalp(mid, true);
                    if (!dz.definitely_nonzero()) break;
                    CBall nz = mid - evalp(mid, false) / dz;
                    double r = 2.0 * evalp(nz, false).abs_upper() / dz.abs_lower() + 1e-300;
                    CBall refined = inflate(nz, r);
                    if (refined.rad() > z.rad() && s > 0) break;
                    z = refined;
                }
                out.push_back(z);
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

TowerElement::TowerElement(TowerPtr tower, MultiPoly rep)
    : tower_(std::move(tower)), rep_(tower_ ? tower_->reduce(std::move(rep)) : std::move(rep)) {}

bool TowerElement::is_rational() const { return rep_.is_constant(); }

Rational TowerElement::as_rational() const {
    if (!is_rational()) throw std::domain_error("TowerElement: not rational");
    return rep_.constant_value();
}

bool TowerElement::is_zero() const {
    if (rep_.is_zero()) return true;
    if (!tower_ || tower_->all_verified()) return false;
    for (mpfr_prec_t prec : kPrecLadder) {
        if (prec < g_min_embed_prec && prec != 4096) continue;
        CBall b = embed(prec);
        if (b.definitely_nonzero()) return false;
    }
    throw UndecidedZeroTest("zero test undecided at precision 4096: " + to_string());
}

TowerPtr TowerElement::join(const TowerPtr& a, const TowerPtr& b) {
    if (!a) return b;
    if (!b) return a;
    if (a == b) return a;
    // same tower object content is also acceptable
    if (a->levels().size() == b->levels().size()) {
        bool same = true;
        for (size_t i = 0; i < a->levels().size(); ++i)
            if (a->levels()[i].name != b->levels()[i].name) same = false;
        if (same) return a;
    }
    throw TowerMismatch("elements belong to different towers");
}

TowerElement TowerElement::operator-() const {
    TowerElement out = *this;
    out.rep_ = -out.rep_;
    return out;
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
    tower_ = join(tower_, o.tower_);
    rep_ += o.rep_;
    return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
    tower_ = join(tower_, o.tower_);
    rep_ -= o.rep_;
    return *this;
}

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
    TowerPtr t = TowerElement::join(a.tower_, b.tower_);
    MultiPoly prod = a.rep_ * b.rep_;
    if (t) return TowerElement(t, std::move(prod));
    TowerElement out;
    out.rep_ = std::move(prod);
    return out;
}

TowerElement TowerElement::operator*(const Rational& s) const {
    TowerElement out = *this;
    out.rep_ = out.rep_ * s;
    return out;
}

TowerElement TowerElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    TowerElement acc(1), base = *this;
    if (tower_) acc = tower_->one();
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

namespace {

// Element viewed as a dense polynomial in the generator of level `lev`.
std::vector<TowerElement> to_level_poly(const TowerElement& x, int lev) {
    const auto& name = x.tower()->levels()[lev].name;
    int d = x.rep().degree(name);
    std::vector<TowerElement> out;
    for (int k = 0; k <= d; ++k)
        out.push_back(TowerElement(x.tower(), x.rep().coeff_of(name, k)));
    while (!out.empty() && out.back().rep().is_zero()) out.pop_back();
    return out;
}

int top_level_of(const TowerElement& x) {
    if (!x.tower()) return -1;
    const auto& ls = x.tower()->levels();
    for (int i = static_cast<int>(ls.size()) - 1; i >= 0; --i)
        if (x.rep().degree(ls[i].name) > 0) return i;
    return -1;
}

}  // namespace

TowerElement TowerElement::inverse() const {
    if (rep_.is_zero()) throw std::domain_error("TowerElement: inversion of zero");
    int lev = top_level_of(*this);
    if (lev < 0) {
        Rational q = rep_.constant_value().inverse();
        return tower_ ? tower_->from_rational(q) : TowerElement(q);
    }
    // extended Euclid against the level minimal polynomial over the subtower
    const auto& level = tower_->levels()[lev];
    const std::string& g = level.name;
    std::vector<TowerElement> A = to_level_poly(*this, lev);
    std::vector<TowerElement> M;
    for (const auto& c : level.minpoly) M.push_back(TowerElement(tower_, c));

    auto deg = [](const std::vector<TowerElement>& p) { return static_cast<int>(p.size()) - 1; };
    auto trim = [](std::vector<TowerElement>& p) {
        while (!p.empty() && p.back().rep().is_zero()) p.pop_back();
    };
    // r0 = M, r1 = A; s tracks the A-cofactor: r = s*A (mod M)
    std::vector<TowerElement> r0 = M, r1 = A;
    std::vector<TowerElement> s0, s1{tower_->one()};
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        std::vector<TowerElement> rem = r0, quot(std::max<size_t>(1, r0.size() - r1.size() + 1),
                                                 TowerElement(0));
        TowerElement lcinv = r1.back().inverse();
        while (static_cast<int>(rem.size()) >= static_cast<int>(r1.size()) && !rem.empty()) {
            int k = deg(rem) - deg(r1);
            TowerElement f = rem.back() * lcinv;
            quot[k] = f;
            for (size_t i = 0; i < r1.size(); ++i) rem[i + k] -= f * r1[i];
            rem.pop_back();
            trim(rem);
            if (rem.empty()) break;
        }
        // s2 = s0 - q*s1
        std::vector<TowerElement> s2 = s0;
        size_t need = quot.size() + s1.size();
        if (s2.size() < need) s2.resize(need, TowerElement(0));
        for (size_t i = 0; i < quot.size(); ++i) {
            if (quot[i].rep().is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quot[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
        if (r1.empty()) break;
    }
    if (r1.empty() || deg(r1) != 0) {
        throw std::domain_error(
            "TowerElement: inversion failed (zero divisor under a reducible level relation)");
    }
    TowerElement c = r1[0].inverse();
    // inverse = c * s1 evaluated at g
    TowerElement gen = tower_->gen(g);
    TowerElement acc = tower_->zero();
    for (int i = deg(s1); i >= 0; --i) acc = acc * gen + s1[i];
    return acc * c;
}

CBall TowerElement::embed(mpfr_prec_t prec) const {
    if (!tower_ || rep_.is_constant()) {
        Rational q = rep_.is_zero() ? Rational(0) : rep_.constant_value();
        return CBall::from_rational(q, prec);
    }
    // guard bits keep the returned radius comfortably below 2^-prec
    prec += 48;
    auto gens = tower_->generator_balls(prec);
    // power tables per generator
    const auto& vars = rep_.vars();
    std::vector<std::vector<CBall>> pows(vars.size());
    for (size_t vi = 0; vi < vars.size(); ++vi) {
        int d = rep_.degree(vars[vi]);
        int li = tower_->level_index(vars[vi]);
        pows[vi].push_back(CBall::from_rational(Rational(1), prec));
        for (int e = 1; e <= d; ++e) pows[vi].push_back(pows[vi].back() * gens[li]);
    }
    CBall acc(prec);
    for (const auto& [e, c] : rep_.terms()) {
        CBall t = CBall::from_rational(c, prec);
        for (size_t vi = 0; vi < vars.size(); ++vi)
            if (e[vi] > 0) t = t * pows[vi][e[vi]];
        acc = acc + t;
    }
    return acc;
}

// ---------------------------------------------------------------------------

TowerPtr FieldTower::with_cyclotomic(long n) const {
    if (n < 1 || n > 120) throw std::invalid_argument("with_cyclotomic: n out of range [1,120]");
    QPoly phi = cyclotomic_polynomial(n);
    auto t = std::make_shared<FieldTower>(*this);
    TowerLevel l;
    l.name = "z" + std::to_string(n);
    if (level_index(l.name) >= 0) throw std::invalid_argument("generator exists: " + l.name);
    l.degree = phi.degree_checked();
    for (int j = 0; j <= l.degree; ++j) l.minpoly.push_back(MultiPoly(phi.coeff(j)));
    l.embedding = CBall::root_of_unity(1, n, kBranchPrec);
    l.kind = TowerLevel::Kind::Cyclotomic;
    l.cyc_n = n;
    // cyclotomic polynomials are irreducible over Q; over a nontrivial lower
    // tower the relation may factor, so only the bottom level is certified
    l.irreducible_verified = levels_.empty();
    t->levels_.push_back(std::move(l));
    return t;
}

namespace {

// Norm of x^k - base to Q[x] via iterated resultants over the tower levels.
QPoly radical_norm_poly(const FieldTower& tower, const MultiPoly& base, int k) {
    MultiPoly f = MultiPoly::from_qpoly(QPoly::monomial(Rational(1), k), "_x") - base;
    for (int i = static_cast<int>(tower.levels().size()) - 1; i >= 0; --i) {
        const auto& name = tower.levels()[i].name;
        if (f.degree(name) <= 0) continue;
        f = resultant(f, tower.level_minpoly(i), name);
    }
    return f.to_qpoly("_x");
}

}  // namespace

TowerPtr FieldTower::with_radical(const std::string& name, const TowerElement& base, int k,
                                  std::optional<CBall> branch) const {
    if (k < 1) throw std::invalid_argument("with_radical: k must be positive");
    if (base.is_zero()) throw std::invalid_argument("with_radical: zero base");
    if (level_index(name) >= 0) throw std::invalid_argument("generator exists: " + name);
    MultiPoly baserep = base.rep();

    CBall ball(kBranchPrec);
    bool have_ball = false;
    if (branch) {
        if (branch->contains_zero())
            throw std::invalid_argument("with_radical: branch ball contains zero");
        // the supplied ball must select exactly one of the k roots
        mpfr_prec_t p = kBranchPrec;
        CBall b = TowerElement(shared_from_this(), baserep).embed(p);
        if (!b.definitely_nonzero())
            throw std::runtime_error("with_radical: base embedding not separated from zero");
        CBall root = b.principal_root(k);
        int matches = 0;
        for (int j = 0; j < k; ++j) {
            CBall cand = j == 0 ? root : root * CBall::root_of_unity(j, k, p);
            if (cand.overlaps(*branch)) {
                ++matches;
                ball = cand;
            }
        }
        if (matches != 1)
            throw std::invalid_argument("with_radical: branch ball selects " +
                                        std::to_string(matches) + " roots");
        have_ball = true;
    } else {
        // positive real root when one exists, else smallest non-negative argument
        mpfr_prec_t p = kBranchPrec;
        for (int tries = 0; tries < 4 && !have_ball; ++tries, p *= 2) {
            CBall b = TowerElement(shared_from_this(), baserep).embed(p);
            if (!b.definitely_nonzero()) continue;
            CBall root = b.principal_root(k);
            CBall best = root;
            for (int j = 0; j < k; ++j) {
                CBall cand = j == 0 ? root : root * CBall::root_of_unity(j, k, p);
                if (std::abs(cand.im_d()) < cand.abs_lower() * 1e-12 && cand.re_d() > 0) {
                    best = cand;
                    break;
                }
            }
            // spacing between the k roots is |root| * 2 sin(pi/k)
            double sep = best.abs_lower() * 2.0 * std::sin(3.141592653589 / std::max(2, k));
            if (k > 1 && best.rad() > sep / 8) continue;
            ball = best;
            have_ball = true;
        }
        if (!have_ball) throw std::runtime_error("with_radical: failed to isolate a branch");
    }

    auto t = std::make_shared<FieldTower>(*this);
    TowerLevel l;
    l.name = name;
    l.degree = k;
    for (int j = 0; j < k; ++j) l.minpoly.push_back(j == 0 ? -baserep : MultiPoly());
    l.minpoly.push_back(MultiPoly(Rational(1)));
    l.embedding = ball;
    l.kind = TowerLevel::Kind::Radical;
    l.rad_k = k;
    l.rad_base = baserep;

    // certify irreducibility when feasible
    long subdeg = total_degree();
    try {
        if (base.is_rational()) {
            std::vector<Rational> cs(k + 1);
            cs[0] = -base.as_rational();
            cs[k] = Rational(1);
            if (gcd(Integer(k), Integer(subdeg)) == 1 && proves_irreducible(QPoly(std::move(cs))))
                l.irreducible_verified = true;
        } else if (k * subdeg <= 12) {
            QPoly norm = radical_norm_poly(*this, baserep, k);
            if (proves_irreducible(norm.monic())) l.irreducible_verified = true;
        }
    } catch (const std::exception&) {
        // leave unverified; the hybrid zero test covers arithmetic soundly
    }
    t->levels_.push_back(std::move(l));
    return t;
}

TowerPtr FieldTower::with_generic(const std::string& name,
                                  const std::vector<TowerElement>& minpoly,
                                  const CBall& ball) const {
    if (minpoly.size() < 2) throw std::invalid_argument("with_generic: degree must be >= 1");
    if (level_index(name) >= 0) throw std::invalid_argument("generator exists: " + name);
    if (!(minpoly.back() - TowerElement(1)).rep().is_zero())
        throw std::invalid_argument("with_generic: minimal polynomial must be monic");
    auto t = std::make_shared<FieldTower>(*this);
    TowerLevel l;
    l.name = name;
    l.degree = static_cast<int>(minpoly.size()) - 1;
    for (const auto& c : minpoly) l.minpoly.push_back(c.rep());
    l.embedding = ball;
    l.kind = TowerLevel::Kind::Generic;
    t->levels_.push_back(std::move(l));
    return t;
}

TowerPtr FieldTower::with_level(const TowerLevel& level) const {
    if (level_index(level.name) >= 0)
        throw std::invalid_argument("with_level: generator exists: " + level.name);
    for (const auto& c : level.minpoly)
        for (const auto& v : c.vars())
            if (c.degree(v) > 0 && level_index(v) < 0)
                throw TowerMismatch("with_level: missing lower generator " + v);
    auto t = std::make_shared<FieldTower>(*this);
    t->levels_.push_back(level);
    return t;
}

TowerPtr make_cyclotomic(long n) {
    return FieldTower::rationals()->with_cyclotomic(n);
}

TowerPtr adjoin_radical(const TowerPtr& tower, const TowerElement& base, int k,
                        std::optional<CBall> branch, const std::string& name) {
    std::string nm = name.empty() ? "r" + std::to_string(tower->levels().size()) : name;
    return tower->with_radical(nm, base, k, branch);
}

namespace {
CBall eval_qpoly_ball(const QPoly& p, const CBall& x) {
    CBall acc(x.prec());
    if (p.is_zero()) return acc;
    for (int i = p.degree_checked(); i >= 0; --i)
        acc = acc * x + CBall::from_rational(p.coeff(i), x.prec());
    return acc;
}
}  // namespace

QPoly minimal_polynomial(const TowerElement& x, long degree_bound) {
    if (!x.tower() || x.is_rational()) {
        Rational q = x.rep().is_zero() ? Rational(0) : x.rep().constant_value();
        return QPoly(std::vector<Rational>{-q, Rational(1)});
    }
    const FieldTower& tw = *x.tower();
    if (tw.total_degree() > degree_bound)
        throw std::invalid_argument("minimal_polynomial: tower degree exceeds bound");
    MultiPoly f = MultiPoly::variable("_z") - x.rep();
    for (int i = static_cast<int>(tw.levels().size()) - 1; i >= 0; --i) {
        const auto& name = tw.levels()[i].name;
        if (f.degree(name) <= 0) continue;
        f = resultant(f, tw.level_minpoly(i), name);
    }
    QPoly P = squarefree_part(f.to_qpoly("_z")).monic();
    if (tw.all_verified()) {
        return P;  // product over the Galois conjugates; square-free part is minimal
    }
    // factor and keep the annihilating piece selected by the embedding
    auto fac = structured_factor(P);
    std::vector<QPoly> cands;
    for (const auto& fc : fac.factors) cands.push_back(fc.poly);
    for (mpfr_prec_t prec : kPrecLadder) {
        if (cands.size() <= 1) break;
        CBall xb = x.embed(prec);
        std::vector<QPoly> keep;
        for (const auto& c : cands) {
            if (eval_qpoly_ball(c, xb).contains_zero()) keep.push_back(c);
        }
        if (!keep.empty()) cands = keep;
    }
    // decide exactly among survivors
    QPoly best;
    for (const auto& c : cands) {
        TowerElement val = c.eval(x);
        if (val.is_zero() && (best.is_zero() || c.degree_checked() < best.degree_checked()))
            best = c;
    }
    if (best.is_zero())
        throw std::runtime_error("minimal_polynomial: no annihilating factor found");
    for (const auto& fc : fac.factors) {
        if (fc.poly == best && fc.status != FactorStatus::ProvenIrreducible)
            throw std::runtime_error("minimal_polynomial: minimality not certified");
    }
    return best;
}

TowerElement transport(const TowerElement& x, const TowerPtr& target) {
    if (!x.tower()) return TowerElement(target, x.rep());
    for (const auto& l : x.tower()->levels()) {
        if (x.rep().degree(l.name) <= 0 && l.minpoly.empty()) continue;
        if (x.rep().degree(l.name) <= 0) continue;
        int ti = target->level_index(l.name);
        if (ti < 0) throw TowerMismatch("transport: target lacks generator " + l.name);
        const auto& tl = target->levels()[ti];
        if (tl.degree != l.degree) throw TowerMismatch("transport: degree mismatch for " + l.name);
        for (int j = 0; j <= l.degree; ++j)
            if (!(tl.minpoly[j] - l.minpoly[j]).is_zero())
                throw TowerMismatch("transport: relation mismatch for " + l.name);
    }
    return TowerElement(target, x.rep());
}

}  // namespace mwl

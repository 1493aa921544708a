#include "mwl/systems.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

#include "mwl/factor.hpp"

namespace mwl {

namespace {

// sign/content normalization: primitive integer coefficients, leading term
// (in lex order) positive
MultiPoly normalize_eq(const MultiPoly& f) {
    if (f.is_zero()) return f;
    MultiPoly g = f.primitive();
    if (g.terms().rbegin()->second.sign() < 0) g = -g;
    return g;
}

// strip monomial factors in the given variables (units and survivors of
// elimination; roots at 0 are degenerate-parameterization artifacts)
MultiPoly strip_monomials(const MultiPoly& f, const std::vector<std::string>& vars) {
    if (f.is_zero()) return f;
    MultiPoly g = f;
    for (const auto& v : vars) {
        int m = g.degree(v);
        if (m <= 0) continue;
        int minexp = m;
        auto idx = std::find(g.vars().begin(), g.vars().end(), v);
        if (idx == g.vars().end()) continue;
        size_t vi = idx - g.vars().begin();
        for (const auto& [e, c] : g.terms()) minexp = std::min(minexp, e[vi]);
        if (minexp > 0) g = exact_div(g, MultiPoly::variable(v).pow(minexp));
    }
    return g;
}

}  // namespace

CoefficientSystem build_system(const SurfaceModel& s, const Ansatz& z) {
    CoefficientSystem sys;
    sys.surface = s;
    sys.ansatz = z;

    // F = y_num^2 - x_num^3 - u^(2*y_den) * B(v), with 2*y_den == 3*x_den
    MultiPoly F = z.y_num * z.y_num - z.x_num.pow(3);
    if (2 * z.y_den_upow != 3 * z.x_den_upow)
        throw std::invalid_argument("build_system: denominator powers must satisfy 2dy = 3dx");
    MultiPoly v = MultiPoly::variable("v");
    MultiPoly B = v.pow(s.a + s.b) + v.pow(s.a);
    MultiPoly scale(Rational(1));
    if (!z.unit.empty() && z.y_den_upow > 0)
        scale = MultiPoly::variable(z.unit).pow(2 * z.y_den_upow);
    F -= scale * B;

    int dv = F.degree("v");
    for (int k = dv; k >= 0; --k) {
        MultiPoly eq = F.coeff_of("v", k);
        if (eq.is_zero()) continue;
        if (!z.unit.empty()) eq = strip_monomials(eq, {z.unit});
        if (z.collapse_power > 1) {
            // u^(collapse_power) -> collapsed variable, exponents must divide
            MultiPoly out;
            int du = eq.degree(z.unit);
            if (du % z.collapse_power != 0)
                throw std::domain_error("build_system: unit exponents not collapsible");
            for (int j = 0; j <= du; j += z.collapse_power) {
                MultiPoly part = eq.coeff_of(z.unit, j);
                out += part * MultiPoly::variable(z.collapsed_name).pow(j / z.collapse_power);
                if (j + 1 <= du && !eq.coeff_of(z.unit, j + 1).is_zero())
                    throw std::domain_error("build_system: unit exponents not collapsible");
            }
            eq = out;
        }
        eq = normalize_eq(eq);
        if (!eq.is_zero()) sys.equations.push_back(eq);
    }
    return sys;
}

namespace {

// linear in `sym` with a nonzero rational constant coefficient?
bool constant_linear(const MultiPoly& eq, const std::string& sym, MultiPoly& num, Rational& den) {
    if (eq.degree(sym) != 1) return false;
    MultiPoly c1 = eq.coeff_of(sym, 1);
    if (!c1.is_constant()) return false;
    den = c1.constant_value();
    num = -eq.coeff_of(sym, 0);
    return !den.is_zero();
}

}  // namespace

void prepare_elimination(CoefficientSystem& sys, const std::string& survivor) {
    sys.linear.clear();
    sys.resultant_order.clear();
    sys.stages.clear();
    sys.final_eqs.clear();

    std::vector<std::string> pending;
    for (const auto& s : sys.ansatz.symbols)
        if (s != survivor) pending.push_back(s);

    std::vector<MultiPoly> eqs = sys.equations;

    // pass 1: constant-coefficient linear solves, repeated to a fixed point
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            for (size_t i = 0; i < eqs.size(); ++i) {
                MultiPoly num;
                Rational den;
                if (!constant_linear(eqs[i], *it, num, den)) continue;
                MultiPoly value = num * den.inverse();
                std::vector<MultiPoly> next;
                for (size_t j = 0; j < eqs.size(); ++j) {
                    if (j == i) continue;
                    MultiPoly g = normalize_eq(eqs[j].substitute(*it, value));
                    if (!g.is_zero()) next.push_back(g);
                }
                sys.linear.push_back({*it, num, den});
                eqs = std::move(next);
                pending.erase(it);
                progress = true;
                break;
            }
            if (progress) break;
        }
    }

    // pass 2: all-pairs resultants per remaining symbol
    for (const auto& sym : pending) {
        std::vector<MultiPoly> with, without;
        for (const auto& e : eqs)
            (e.degree(sym) > 0 ? with : without).push_back(e);
        sys.resultant_order.push_back(sym);
        sys.stages.push_back(eqs);
        std::vector<MultiPoly> next = without;
        // a symbol constrained by a single equation only bounds that symbol;
        // the projection drops the equation
        size_t cap = with.size() <= 4 ? with.size() : 2;
        for (size_t i = 0; i < cap; ++i) {
            for (size_t j = i + 1; j < with.size(); ++j) {
                MultiPoly r = resultant(with[i], with[j], sym);
                std::vector<std::string> units;
                if (!sys.ansatz.unit.empty()) units.push_back(sys.ansatz.unit);
                if (!sys.ansatz.collapsed_name.empty()) units.push_back(sys.ansatz.collapsed_name);
                units.push_back(survivor);
                r = normalize_eq(strip_monomials(r, units));
                if (!r.is_zero() && !r.is_constant()) next.push_back(r);
            }
        }
        if (next.empty()) throw std::domain_error("prepare_elimination: degenerate order at " + sym);
        eqs = std::move(next);
    }
    sys.final_eqs = eqs;
}

// ---------------------------------------------------------------------------
// numeric utilities for extraneous-factor certification

std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs) {
    using C = std::complex<double>;
    std::vector<C> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return {};
    for (auto& x : c) x /= c.back();
    // root radius bound
    double R = 1.0;
    for (int i = 0; i < n; ++i) R = std::max(R, std::pow(std::abs(c[i]), 1.0 / (n - i)));
    R *= 2.0;
    std::vector<C> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = std::polar(R * (0.3 + 0.7 * (i + 1.0) / n), 2.0 * M_PI * i / n + 0.7);
    auto eval = [&](C w) {
        C acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * w + c[i];
        return acc;
    };
    for (int iter = 0; iter < 600; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            C denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) == 0.0) denom = 1e-30;
            C d = eval(z[i]) / denom;
            z[i] -= d;
            moved = std::max(moved, std::abs(d));
        }
        if (moved < 1e-14 * R) break;
    }
    return z;
}

namespace {

using Cplx = std::complex<double>;

Cplx eval_mp(const MultiPoly& f, const std::map<std::string, Cplx>& point) {
    Cplx acc = 0;
    for (const auto& [e, c] : f.terms()) {
        Cplx t = c.to_double();
        for (size_t i = 0; i < f.vars().size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(f.vars()[i]);
            if (it == point.end()) throw std::invalid_argument("eval_mp: unassigned " + f.vars()[i]);
            t *= std::pow(it->second, e[i]);
        }
        acc += t;
    }
    return acc;
}

std::vector<Cplx> univariate_coeffs(const MultiPoly& f, const std::string& var,
                                    const std::map<std::string, Cplx>& point) {
    int d = f.degree(var);
    std::vector<Cplx> out(d + 1);
    for (int k = 0; k <= d; ++k) out[k] = eval_mp(f.coeff_of(var, k), point);
    return out;
}

// Does survivor = s0 extend to a full numeric solution of the system?
// Returns 1 (yes), 0 (no), -1 (ambiguous).
int extends_numeric(const CoefficientSystem& sys, const std::string& survivor, Cplx s0) {
    std::vector<std::map<std::string, Cplx>> asg{{{survivor, s0}}};
    std::vector<std::string> vars;
    for (const auto& s : sys.ansatz.symbols)
        if (s != survivor) vars.push_back(s);
    if (sys.ansatz.collapse_power > 1) {
        // the unit itself is determined up to a root of unity; any 6th root works
        // because the system only involves the collapsed variable
    }
    // scale for residual comparison
    double scale = 1.0 + std::abs(s0);

    std::set<std::string> unassigned(vars.begin(), vars.end());
    // solved linear symbols are recovered afterwards; the stage systems only
    // involve resultant-eliminated symbols (reverse order) and the survivor
    for (int k = static_cast<int>(sys.resultant_order.size()) - 1; k >= 0; --k) {
        const std::string& sym = sys.resultant_order[k];
        std::vector<std::map<std::string, Cplx>> next;
        for (const auto& a : asg) {
            // lowest-degree stage equation univariate in sym under `a`
            std::vector<Cplx> best;
            for (const auto& eq : sys.stages[k]) {
                bool ok = eq.degree(sym) > 0;
                for (const auto& v : eq.vars())
                    if (v != sym && eq.degree(v) > 0 && !a.count(v)) ok = false;
                if (!ok) continue;
                auto cs = univariate_coeffs(eq, sym, a);
                while (!cs.empty() && std::abs(cs.back()) < 1e-9 * scale) cs.pop_back();
                if (cs.size() < 2) continue;
                if (best.empty() || cs.size() < best.size()) best = cs;
            }
            if (best.empty()) continue;
            for (Cplx r : complex_roots(best)) {
                auto b = a;
                b[sym] = r;
                if (next.size() < 400) next.push_back(std::move(b));
            }
        }
        asg = std::move(next);
        if (asg.empty()) return 0;
        unassigned.erase(sym);
    }
    // recover linear-solved symbols in reverse solve order
    bool ambiguous = false;
    int good = 0;
    for (auto a : asg) {
        bool ok = true;
        for (int i = static_cast<int>(sys.linear.size()) - 1; i >= 0; --i) {
            try {
                Cplx num = eval_mp(sys.linear[i].numerator, a);
                a[sys.linear[i].symbol] = num / sys.linear[i].denom.to_double();
            } catch (const std::exception&) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        double worst = 0;
        for (const auto& eq : sys.equations) {
            double mag = 0;
            for (const auto& [e, c] : eq.terms()) mag = std::max(mag, std::abs(c.to_double()));
            double res = std::abs(eval_mp(eq, a));
            double sc = mag * std::pow(scale, std::max(1, eq.total_degree()));
            worst = std::max(worst, res / (sc > 0 ? sc : 1.0));
        }
        if (worst < 1e-7) {
            ++good;
            break;
        }
        if (worst < 1e-3) ambiguous = true;
    }
    if (good) return 1;
    return ambiguous ? -1 : 0;
}

}  // namespace

QPoly fundamental_polynomial(CoefficientSystem sys, const std::string& survivor) {
    prepare_elimination(sys, survivor);
    // gcd across the chain results strips chain-dependent junk factors
    QPoly E;
    for (const auto& f : sys.final_eqs) {
        QPoly g = f.to_qpoly(survivor);
        E = E.is_zero() ? g : gcd_poly(E, g);
    }
    if (E.is_zero()) throw std::domain_error("fundamental_polynomial: zero eliminant");
    if (E.degree_checked() == 0)
        throw std::domain_error("fundamental_polynomial: inconsistent system");
    while (E.coeff(0).is_zero()) E = E.shift_down(1);
    E = squarefree_part(E).monic();

    // certify each factor by numeric back-substitution of a sampled root
    auto fac = structured_factor(E);
    QPoly out = QPoly::one();
    for (const auto& f : fac.factors) {
        std::vector<Cplx> cs;
        for (int i = 0; i <= f.poly.degree_checked(); ++i)
            cs.push_back(Cplx(f.poly.coeff(i).to_double(), 0.0));
        auto roots = complex_roots(cs);
        int yes = 0, no = 0, amb = 0;
        for (Cplx r : roots) {
            int v = extends_numeric(sys, survivor, r);
            if (v == 1) ++yes;
            else if (v == 0) ++no;
            else ++amb;
        }
        if (amb || (yes && no))
            throw std::runtime_error("fundamental_polynomial: undecided extraneous factor");
        if (yes) out = out * f.poly;
    }
    if (out.degree_checked() == 0)
        throw std::runtime_error("fundamental_polynomial: all factors extraneous");
    return out.monic();
}

// ---------------------------------------------------------------------------

namespace {

TPoly specialize(const MultiPoly& f, const std::string& var,
                 const std::map<std::string, TowerElement>& asg, const TowerPtr& tower) {
    int d = f.degree(var);
    std::vector<TowerElement> cs(std::max(0, d) + 1, TowerElement(0));
    for (const auto& [e, c] : f.terms()) {
        TowerElement t = tower ? tower->from_rational(c) : TowerElement(c);
        int k = 0;
        for (size_t i = 0; i < f.vars().size(); ++i) {
            if (e[i] == 0) continue;
            if (f.vars()[i] == var) {
                k = e[i];
                continue;
            }
            auto it = asg.find(f.vars()[i]);
            if (it == asg.end()) throw std::invalid_argument("specialize: unassigned " + f.vars()[i]);
            t = t * it->second.pow(e[i]);
        }
        cs[k] += t;
    }
    return TPoly(std::move(cs));
}

TowerElement eval_exact(const MultiPoly& f, const std::map<std::string, TowerElement>& asg,
                        const TowerPtr& tower) {
    TPoly p = specialize(f, "", asg, tower);
    return p.coeff(0);
}

}  // namespace

std::map<std::string, TowerElement> back_substitute(
    const CoefficientSystem& sys, const std::string& survivor, const TowerElement& root,
    const std::map<std::string, TowerElement>& hints) {
    if (sys.stages.empty() && !sys.resultant_order.empty())
        throw std::logic_error("back_substitute: run prepare_elimination first");
    TowerPtr tower = root.tower();
    std::map<std::string, TowerElement> asg = hints;
    asg[survivor] = root;

    // resultant-eliminated symbols, innermost first, via stage-system gcds
    for (int k = static_cast<int>(sys.resultant_order.size()) - 1; k >= 0; --k) {
        const std::string& sym = sys.resultant_order[k];
        if (asg.count(sym)) continue;
        TPoly g;
        for (const auto& eq : sys.stages[k]) {
            bool ready = eq.degree(sym) > 0;
            for (const auto& v : eq.vars())
                if (v != sym && eq.degree(v) > 0 && !asg.count(v)) ready = false;
            if (!ready) continue;
            TPoly p = specialize(eq, sym, asg, tower);
            if (p.is_zero()) continue;
            g = g.is_zero() ? p.monic() : gcd_poly(g, p);
            if (!g.is_zero() && g.degree_checked() == 1) break;
        }
        if (g.is_zero())
            throw std::runtime_error("back_substitute: no usable equation for " + sym);
        if (g.degree_checked() == 0)
            throw std::runtime_error("back_substitute: inconsistent branch for " + sym +
                                     " (degenerate root or wrong hint)");
        if (g.degree_checked() > 1)
            throw std::runtime_error("back_substitute: branch hint required for " + sym);
        asg[sym] = -(g.coeff(0) * g.coeff(1).inverse());
    }
    // linear-solved symbols, reverse order
    for (int i = static_cast<int>(sys.linear.size()) - 1; i >= 0; --i) {
        const auto& ls = sys.linear[i];
        if (asg.count(ls.symbol)) continue;
        asg[ls.symbol] = eval_exact(ls.numerator, asg, tower) * ls.denom.inverse();
    }
    // confirm every original equation vanishes
    for (const auto& eq : sys.equations) {
        if (!eval_exact(eq, asg, tower).is_zero())
            throw std::runtime_error("back_substitute: equation does not vanish at the root");
    }
    return asg;
}

Section section_from_assignment(const CoefficientSystem& sys,
                                const std::map<std::string, TowerElement>& values,
                                const TowerElement& unit_value) {
    TowerPtr tower;
    for (const auto& [k, v] : values)
        if (v.tower()) tower = v.tower();
    if (!tower && unit_value.tower()) tower = unit_value.tower();

    auto build = [&](const MultiPoly& num, int den_pow) {
        TLaurent out;
        TowerElement deninv =
            den_pow == 0 ? TowerElement(1) : unit_value.pow(den_pow).inverse();
        int dv = num.degree("v");
        for (int k = 0; k <= dv; ++k) {
            MultiPoly ck = num.coeff_of("v", k);
            if (ck.is_zero()) continue;
            auto vals = values;
            if (!sys.ansatz.unit.empty()) vals[sys.ansatz.unit] = unit_value;
            TowerElement c = eval_exact(ck, vals, tower);
            out = out + TLaurent::monomial(c * deninv, k);
        }
        return out;
    };
    Section q;
    q.surface = sys.surface;
    q.tower = tower;
    q.x = build(sys.ansatz.x_num, sys.ansatz.x_den_upow);
    q.y = build(sys.ansatz.y_num, sys.ansatz.y_den_upow);
    q.provenance = "derived-from-root";
    return q;
}

Section section_from_root(const CoefficientSystem& sys, const TowerElement& root,
                          const std::map<std::string, TowerElement>& hints,
                          std::optional<TowerElement> unit_value) {
    const std::string& survivor =
        sys.ansatz.survivor.empty() ? sys.ansatz.symbols.back() : sys.ansatz.survivor;
    auto asg = back_substitute(sys, survivor, root, hints);
    TowerElement uv = unit_value ? *unit_value : TowerElement(1);
    if (!sys.ansatz.unit.empty() && !unit_value) {
        // when the survivor is the unit itself, use the root
        if (survivor == sys.ansatz.unit) uv = root;
        else throw std::invalid_argument("section_from_root: unit value required");
    }
    Section q = section_from_assignment(sys, asg, uv);
    if (!verify_section(q))
        throw std::runtime_error("section_from_root: derived section fails verification");
    return q;
}

}  // namespace mwl

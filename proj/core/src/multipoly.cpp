#include "mwl/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwl {

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_[{1}] = Rational(1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant");
    return terms_.begin()->second;
}

bool MultiPoly::has_var(const std::string& v) const {
    return degree(v) > 0;
}

int MultiPoly::degree(const std::string& var) const {
    if (terms_.empty()) return -1;
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    size_t idx = it - vars_.begin();
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
    return d;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::vector<std::string> MultiPoly::merged_vars(const MultiPoly& a, const MultiPoly& b) {
    std::vector<std::string> vs = a.vars_;
    for (const auto& v : b.vars_)
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
    return vs;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vs) const {
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vs.begin(), vs.end(), vars_[i]);
        if (it == vs.end()) throw std::invalid_argument("MultiPoly::with_vars: dropped variable");
        pos[i] = static_cast<int>(it - vs.begin());
    }
    MultiPoly out;
    out.vars_ = vs;
    for (const auto& [e, c] : terms_) {
        std::vector<int> ne(vs.size(), 0);
        for (size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_[std::move(ne)] = c;
    }
    return out;
}

void MultiPoly::prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (vars_ != o.vars_) {
        auto vs = merged_vars(*this, o);
        *this = with_vars(vs);
        MultiPoly ob = o.with_vars(vs);
        for (const auto& [e, c] : ob.terms_) terms_[e] += c;
    } else {
        for (const auto& [e, c] : o.terms_) terms_[e] += c;
    }
    prune();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    return *this += -o;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto vs = MultiPoly::merged_vars(a, b);
    MultiPoly aa = a.with_vars(vs), bb = b.with_vars(vs);
    MultiPoly out;
    out.vars_ = vs;
    for (const auto& [ea, ca] : aa.terms_) {
        for (const auto& [eb, cb] : bb.terms_) {
            std::vector<int> e(vs.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.terms_[std::move(e)] += ca * cb;
        }
    }
    out.prune();
    return out;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
    if (s.is_zero()) return MultiPoly();
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c *= s;
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly acc(Rational(1)), base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = (e >>= 1) ? base * base : base;
    }
    return acc;
}

MultiPoly MultiPoly::coeff_of(const std::string& var, int k) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) {
        if (k == 0) return *this;
        return MultiPoly();
    }
    size_t idx = it - vars_.begin();
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[idx] != k) continue;
        auto ne = e;
        ne[idx] = 0;
        out.terms_[std::move(ne)] = c;
    }
    return out;
}

MultiPoly MultiPoly::substitute(const std::string& var, const MultiPoly& value) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return *this;
    int d = degree(var);
    // Horner in var
    MultiPoly acc;
    for (int k = d; k >= 0; --k) acc = acc * value + coeff_of(var, k);
    return acc;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    Rational acc;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (e[i] == 0) continue;
            auto it = point.find(vars_[i]);
            if (it == point.end())
                throw std::invalid_argument("MultiPoly::eval: missing value for " + vars_[i]);
            t *= it->second.pow(e[i]);
        }
        acc += t;
    }
    return acc;
}

Rational MultiPoly::content() const {
    Rational c;
    for (const auto& [e, coef] : terms_) c = gcd(c, coef);
    return c;
}

MultiPoly MultiPoly::primitive() const {
    if (is_zero()) return *this;
    return *this * content().inverse();
}

MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw std::domain_error("MultiPoly: division by zero");
    auto vs = MultiPoly::merged_vars(a, b);
    MultiPoly r = a.with_vars(vs), bb = b.with_vars(vs);
    MultiPoly q;
    q.vars_ = vs;
    const auto& blt = *bb.terms_.rbegin();  // leading term in lex order
    while (!r.is_zero()) {
        const auto& rlt = *r.terms_.rbegin();
        std::vector<int> e(vs.size());
        for (size_t i = 0; i < e.size(); ++i) {
            e[i] = rlt.first[i] - blt.first[i];
            if (e[i] < 0) throw std::domain_error("MultiPoly: inexact division");
        }
        Rational c = rlt.second / blt.second;
        MultiPoly t;
        t.vars_ = vs;
        t.terms_[std::move(e)] = c;
        q += t;
        r -= t * bb;
    }
    return q;
}

QPoly MultiPoly::to_qpoly(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    std::vector<Rational> cs(std::max(0, degree(var)) + 1);
    for (const auto& [e, c] : terms_) {
        int k = 0;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (static_cast<int>(i) == (it == vars_.end() ? -1 : it - vars_.begin())) {
                k = e[i];
            } else if (e[i] != 0) {
                throw std::domain_error("MultiPoly::to_qpoly: extra variable " + vars_[i]);
            }
        }
        cs[k] = c;
    }
    return QPoly(std::move(cs));
}

MultiPoly MultiPoly::from_qpoly(const QPoly& p, const std::string& var) {
    MultiPoly x = variable(var);
    MultiPoly acc;
    for (int k = p.is_zero() ? -1 : p.degree_checked(); k >= 0; --k)
        acc = acc * x + MultiPoly(p.coeff(k));
    return acc;
}

}  // namespace mwl

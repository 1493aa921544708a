#pragma once

#include <map>
#include <stdexcept>

#include "mwl/poly.hpp"

namespace mwl {

// Cheap syntactic zero test used by container pruning. Rings with a lazy
// normal form (tower elements under unverified relations) override this so
// that plain arithmetic never triggers the embedding-based zero test.
template <typename R>
bool cheap_zero(const R& v) { return v.is_zero(); }

// Laurent polynomial: finite map from (possibly negative) exponents to
// nonzero ring elements.
template <typename R>
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const R& c) {
        if (!cheap_zero(c)) c_[0] = c;
    }
    static LaurentPoly monomial(const R& c, int k) {
        LaurentPoly p;
        if (!cheap_zero(c)) p.c_[k] = c;
        return p;
    }
    static LaurentPoly from_poly(const Poly<R>& p, int shift = 0) {
        LaurentPoly out;
        for (size_t i = 0; i < p.coeffs().size(); ++i)
            if (!cheap_zero(p.coeffs()[i])) out.c_[static_cast<int>(i) + shift] = p.coeffs()[i];
        return out;
    }

    const std::map<int, R>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    R coeff(int k) const {
        auto it = c_.find(k);
        return it == c_.end() ? R() : it->second;
    }
    int min_exp() const { return check_nonzero(), c_.begin()->first; }
    int max_exp() const { return check_nonzero(), c_.rbegin()->first; }

    LaurentPoly operator-() const {
        LaurentPoly out = *this;
        for (auto& [k, v] : out.c_) v = -v;
        return out;
    }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out = a;
        for (const auto& [k, v] : b.c_) {
            auto it = out.c_.find(k);
            if (it == out.c_.end()) {
                out.c_[k] = v;
            } else {
                it->second += v;
                if (cheap_zero(it->second)) out.c_.erase(it);
            }
        }
        return out;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly out;
        for (const auto& [ka, va] : a.c_)
            for (const auto& [kb, vb] : b.c_) {
                R prod = va * vb;
                if (cheap_zero(prod)) continue;
                auto it = out.c_.find(ka + kb);
                if (it == out.c_.end()) {
                    out.c_[ka + kb] = prod;
                } else {
                    it->second += prod;
                    if (cheap_zero(it->second)) out.c_.erase(it);
                }
            }
        return out;
    }
    LaurentPoly operator*(const R& s) const {
        LaurentPoly out;
        for (const auto& [k, v] : c_) {
            R prod = v * s;
            if (!cheap_zero(prod)) out.c_[k] = prod;
        }
        return out;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a - b).is_zero();
    }

    // exact zero test that tolerates lazily-kept zero coefficients in R
    bool reduces_to_zero() const {
        for (const auto& [k, v] : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    LaurentPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly acc(R(1));
        LaurentPoly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }
    // substitute x -> x^k (k may be negative, giving x^(k*i))
    LaurentPoly stretch(int k) const {
        if (k == 0) throw std::invalid_argument("LaurentPoly::stretch: k = 0");
        LaurentPoly out;
        for (const auto& [e, v] : c_) out.c_[e * k] = v;
        return out;
    }
    LaurentPoly shift(int k) const {  // multiply by x^k
        LaurentPoly out;
        for (const auto& [e, v] : c_) out.c_[e + k] = v;
        return out;
    }

    // conversion to a plain polynomial; requires min_exp >= 0
    Poly<R> to_poly() const {
        if (is_zero()) return Poly<R>();
        if (min_exp() < 0) throw std::domain_error("LaurentPoly: negative exponents present");
        std::vector<R> cs(max_exp() + 1);
        for (const auto& [k, v] : c_) cs[k] = v;
        return Poly<R>(std::move(cs));
    }

private:
    void check_nonzero() const {
        if (c_.empty()) throw std::domain_error("LaurentPoly: zero polynomial");
    }
    std::map<int, R> c_;
};

}  // namespace mwl

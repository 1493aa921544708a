#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mwl/rational.hpp"

namespace mwl {

// Dense univariate polynomial over a coefficient ring R.
//
// R must default-construct to zero, construct from int, and provide
// is_zero(), unary -, +=, -=, *. Field-only operations (monic, divrem, gcd)
// additionally need inverse().
//
// degree() of the zero polynomial is std::nullopt (minus infinity), never -1.
template <typename R>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(R(1)); }
    static Poly constant(const R& c) { return Poly(std::vector<R>{c}); }
    // c * x^k
    static Poly monomial(const R& c, int k) {
        if (k < 0) throw std::invalid_argument("Poly: negative exponent");
        std::vector<R> v(k + 1);
        v[k] = c;
        return Poly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return static_cast<int>(c_.size()) - 1;
    }
    int degree_checked() const {
        auto d = degree();
        if (!d) throw std::domain_error("Poly: degree of zero polynomial");
        return *d;
    }
    const R& lc() const {
        if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
        return c_.back();
    }
    R coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return R();
        return c_[i];
    }
    const std::vector<R>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] += a.c_[i];
            if (i < b.c_.size()) v[i] += b.c_[i];
        }
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<R> v(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < a.c_.size()) v[i] += a.c_[i];
            if (i < b.c_.size()) v[i] -= b.c_[i];
        }
        return Poly(std::move(v));
    }
    Poly operator-() const {
        std::vector<R> v(c_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = -c_[i];
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<R> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                v[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return Poly(std::move(v));
    }
    friend Poly operator*(const Poly& a, const R& s) {
        std::vector<R> v(a.c_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = a.c_[i] * s;
        return Poly(std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] - b.c_[i]).is_zero()) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Quotient and remainder; requires invertible leading coefficient of q.
    friend std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q) {
        if (q.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        R lcinv = q.lc().inverse();
        Poly rem = p;
        int dq = q.degree_checked();
        std::vector<R> quot;
        if (!rem.is_zero() && rem.degree_checked() >= dq)
            quot.resize(rem.degree_checked() - dq + 1);
        while (!rem.is_zero() && rem.degree_checked() >= dq) {
            int k = rem.degree_checked() - dq;
            R f = rem.lc() * lcinv;
            quot[k] = f;
            std::vector<R> v = rem.c_;
            for (int i = 0; i <= dq; ++i) v[i + k] -= f * q.c_[i];
            v.pop_back();
            rem = Poly(std::move(v));
        }
        return {Poly(std::move(quot)), rem};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * lc().inverse();
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * R(static_cast<int>(i));
        return Poly(std::move(v));
    }

    template <typename T>
    T eval(const T& x) const {
        T acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
        return acc;
    }
    R eval_r(const R& x) const {
        R acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // p(x^k)
    Poly inflate(int k) const {
        if (k <= 0) throw std::invalid_argument("Poly::inflate: k must be positive");
        if (is_zero()) return Poly();
        std::vector<R> v(static_cast<size_t>(degree_checked()) * k + 1);
        for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
        return Poly(std::move(v));
    }
    // Psi with p(x) = Psi(x^k); requires all exponents divisible by k.
    Poly deflate(int k) const {
        if (is_zero()) return Poly();
        std::vector<R> v(degree_checked() / k + 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (i % k != 0) throw std::invalid_argument("Poly::deflate: exponent not divisible");
            v[i / k] = c_[i];
        }
        return Poly(std::move(v));
    }
    // Largest k with p(x) = Psi(x^k); 0 for constants.
    int deflation_index() const {
        long k = 0;
        for (size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero())
                k = k ? gcd(Integer(k), Integer(static_cast<long>(i))).get_si()
                      : static_cast<long>(i);
        return static_cast<int>(k);
    }
    // x^deg * p(1/x)
    Poly reverse() const {
        std::vector<R> v(c_.rbegin(), c_.rend());
        return Poly(std::move(v));
    }
    Poly shift_up(int k) const {  // multiply by x^k
        if (is_zero()) return Poly();
        std::vector<R> v(c_.size() + k);
        for (size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
        return Poly(std::move(v));
    }
    // order of vanishing at 0
    int val_at_zero() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        throw std::domain_error("Poly: valuation of zero polynomial");
    }
    Poly shift_down(int k) const {  // divide by x^k, must be exact
        if (is_zero()) return Poly();
        if (val_at_zero() < k) throw std::domain_error("Poly: inexact shift_down");
        return Poly(std::vector<R>(c_.begin() + k, c_.end()));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<R> c_;  // c_[i] is the coefficient of x^i; invariant: back() nonzero
};

// Monic gcd over a coefficient field; gcd(0,0) = 0, gcd(p,0) = monic(p).
template <typename R>
Poly<R> gcd_poly(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

using QPoly = Poly<Rational>;

inline Rational content(const QPoly& p) {
    Rational c;
    for (const auto& x : p.coeffs()) c = gcd(c, x);
    return c;
}
inline QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    return p * content(p).inverse();
}

// Square-free decomposition over Q (Yun): p = lc * prod g_i^i with g_i monic,
// square-free and pairwise coprime; only nontrivial g_i are listed.
std::vector<std::pair<QPoly, int>> squarefree_decomposition(QPoly p);
QPoly squarefree_part(const QPoly& p);

}  // namespace mwl

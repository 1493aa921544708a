#include <stdexcept>
#include <vector>

#include "mwl/multipoly.hpp"

namespace mwl {

namespace {

// Univariate view: coefficients in the remaining variables, index = power of
// the eliminated variable.
struct UPoly {
    std::vector<MultiPoly> c;

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const MultiPoly& lc() const { return c.back(); }
};

UPoly decompose(const MultiPoly& p, const std::string& var) {
    UPoly u;
    int d = p.degree(var);
    for (int k = 0; k <= d; ++k) u.c.push_back(p.coeff_of(var, k));
    u.trim();
    return u;
}

UPoly scale(const UPoly& a, const MultiPoly& m) {
    UPoly out;
    out.c.reserve(a.c.size());
    for (const auto& x : a.c) out.c.push_back(x * m);
    out.trim();
    return out;
}

UPoly sub_shifted(const UPoly& a, const UPoly& b, const MultiPoly& m, int k) {
    // a - m * x^k * b
    UPoly out = a;
    if (out.c.size() < b.c.size() + k) out.c.resize(b.c.size() + k);
    for (size_t i = 0; i < b.c.size(); ++i) out.c[i + k] -= m * b.c[i];
    out.trim();
    return out;
}

// lc(B)^(deg A - deg B + 1) * A mod B
UPoly prem(UPoly A, const UPoly& B) {
    int e = A.deg() - B.deg() + 1;
    const MultiPoly& d = B.lc();
    while (!A.is_zero() && A.deg() >= B.deg()) {
        MultiPoly la = A.lc();
        int k = A.deg() - B.deg();
        A = sub_shifted(scale(A, d), B, la, k);
        --e;
    }
    if (e > 0) A = scale(A, d.pow(e));
    return A;
}

UPoly div_coeffs(const UPoly& a, const MultiPoly& m) {
    UPoly out;
    out.c.reserve(a.c.size());
    for (const auto& x : a.c) out.c.push_back(x.is_zero() ? x : exact_div(x, m));
    out.trim();
    return out;
}

}  // namespace

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
    int dp = p.degree(var), dq = q.degree(var);
    if (dp <= 0 && dq <= 0)
        throw std::invalid_argument("resultant: variable " + var + " absent from both inputs");
    if (p.is_zero() || q.is_zero()) return MultiPoly();
    if (dp == 0) return p.pow(dq);
    if (dq == 0) return q.pow(dp);

    UPoly A = decompose(p, var), B = decompose(q, var);
    int sign = 1;
    if (A.deg() < B.deg()) {
        std::swap(A, B);
        if ((A.deg() & 1) && (B.deg() & 1)) sign = -sign;
    }
    // pull out rational contents: Res(aA', bB') = a^degB b^degA Res(A', B')
    Rational ca, cb;
    for (const auto& x : A.c) ca = gcd(ca, x.content());
    for (const auto& x : B.c) cb = gcd(cb, x.content());
    Rational tfac = ca.pow(B.deg()) * cb.pow(A.deg());
    A = scale(A, MultiPoly(ca.inverse()));
    B = scale(B, MultiPoly(cb.inverse()));

    MultiPoly g(1), h(1);
    while (true) {
        int da = A.deg(), db = B.deg();
        int delta = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        UPoly R = prem(A, B);
        A = B;
        if (R.is_zero()) {
            if (A.deg() > 0) return MultiPoly();  // common factor of positive degree
            B = R;
            break;
        }
        B = div_coeffs(R, g * h.pow(delta));
        g = A.lc();
        if (delta == 1)
            h = g;
        else if (delta > 1)
            h = exact_div(g.pow(delta), h.pow(delta - 1));
        if (B.deg() <= 0) break;
    }
    if (B.is_zero()) return MultiPoly();
    int da = A.deg();
    MultiPoly res = da == 0 ? MultiPoly(1)
                            : (da == 1 ? B.lc() : exact_div(B.lc().pow(da), h.pow(da - 1)));
    res = res * tfac;
    if (sign < 0) res = -res;
    return res;
}

Rational resultant_q(const QPoly& p, const QPoly& q) {
    if (p.is_zero() || q.is_zero()) return Rational(0);
    // Euclidean recursion over Q
    QPoly A = p, B = q;
    Rational acc(1);
    int sign = 1;
    if (A.degree_checked() < B.degree_checked()) {
        if ((A.degree_checked() & 1) && (B.degree_checked() & 1)) sign = -sign;
        std::swap(A, B);
    }
    while (true) {
        int da = A.degree_checked();
        int db = B.degree_checked();
        if (db == 0) {
            acc *= B.coeff(0).pow(da);
            break;
        }
        auto [quot, r] = divrem(A, B);
        if (r.is_zero()) return Rational(0);
        int dr = r.degree_checked();
        acc *= B.lc().pow(da - dr);
        if ((da & 1) && (db & 1)) sign = -sign;
        A = B;
        B = r;
    }
    return sign < 0 ? -acc : acc;
}

}  // namespace mwl

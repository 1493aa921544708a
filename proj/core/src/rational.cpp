#include "mwl/rational.hpp"

namespace mwl {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(Integer(s));
    }
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? -static_cast<unsigned long>(e) : e;
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), k);
    return neg ? Rational(den, num) : Rational(num, den);
}

std::string Rational::to_string() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Rational gcd(const Rational& a, const Rational& b) {
    // gcd over Q as content gcd: gcd(p1/q1, p2/q2) = gcd(p1,p2)/lcm(q1,q2)
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    Integer num = gcd(a.numerator(), b.numerator());
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(num, l);
}

std::map<Integer, int> factor_integer(const Integer& n, unsigned long limit) {
    if (n == 0) throw std::domain_error("factor_integer: zero");
    std::map<Integer, int> out;
    Integer m = n;
    if (m < 0) {
        out[Integer(-1)] = 1;
        m = -m;
    }
    for (Integer p = 2; p * p <= m && p <= limit; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            out[p]++;
            m /= p;
        }
    }
    if (m > 1) {
        if (m > Integer(limit) * Integer(limit) &&
            mpz_probab_prime_p(m.get_mpz_t(), 25) == 0)
            throw std::runtime_error("factor_integer: unfactored composite part " + m.get_str());
        out[m]++;
    }
    return out;
}

std::map<Integer, int> factor_rational(const Rational& q, unsigned long limit) {
    if (q.is_zero()) throw std::domain_error("factor_rational: zero");
    auto out = factor_integer(q.numerator(), limit);
    for (const auto& [p, e] : factor_integer(q.denominator(), limit)) out[p] -= e;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

}  // namespace mwl

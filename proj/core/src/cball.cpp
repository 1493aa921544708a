#include "mwl/cball.hpp"

#include <cmath>
#include <stdexcept>

namespace mwl {

namespace {
constexpr mpfr_prec_t kRadPrec = 32;

// |re| + |im| rounded up at radius precision
MpReal abs_sum_up(const MpReal& re, const MpReal& im) {
    MpReal s(kRadPrec);
    mpfr_t a;
    mpfr_init2(a, kRadPrec);
    mpfr_abs(a, re.get(), MPFR_RNDU);
    mpfr_abs(s.get(), im.get(), MPFR_RNDU);
    mpfr_add(s.get(), s.get(), a, MPFR_RNDU);
    mpfr_clear(a);
    return s;
}
}  // namespace

std::string MpReal::to_string(int digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Rg", digits, v_) < 0) return "?";
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

CBall::CBall(mpfr_prec_t prec) : re_(prec), im_(prec), rad_(kRadPrec) {}

CBall::CBall(const Rational& re, const Rational& im, mpfr_prec_t prec)
    : re_(prec), im_(prec), rad_(kRadPrec) {
    mpfr_set_q(re_.get(), re.raw().get_mpq_t(), MPFR_RNDN);
    mpfr_set_q(im_.get(), im.raw().get_mpq_t(), MPFR_RNDN);
    bump_rounding();
}

CBall CBall::from_doubles(double re, double im, double rad, mpfr_prec_t prec) {
    CBall b(prec);
    mpfr_set_d(b.re_.get(), re, MPFR_RNDN);
    mpfr_set_d(b.im_.get(), im, MPFR_RNDN);
    mpfr_set_d(b.rad_.get(), rad, MPFR_RNDU);
    b.bump_rounding();
    return b;
}

CBall CBall::from_strings(const std::string& re, const std::string& im,
                          const std::string& rad, mpfr_prec_t prec) {
    CBall b(prec);
    if (mpfr_set_str(b.re_.get(), re.c_str(), 10, MPFR_RNDN) != 0 && re != "0")
        throw std::invalid_argument("CBall: bad real part '" + re + "'");
    if (mpfr_set_str(b.im_.get(), im.c_str(), 10, MPFR_RNDN) != 0 && im != "0")
        throw std::invalid_argument("CBall: bad imaginary part '" + im + "'");
    if (mpfr_set_str(b.rad_.get(), rad.c_str(), 10, MPFR_RNDU) != 0 && rad != "0")
        throw std::invalid_argument("CBall: bad radius '" + rad + "'");
    b.bump_rounding();
    return b;
}

void CBall::bump_rounding() {
    // absorb center rounding: (|re|+|im|) * 2^(2-prec)
    MpReal s = abs_sum_up(re_, im_);
    mpfr_mul_2si(s.get(), s.get(), 2 - static_cast<long>(prec()), MPFR_RNDU);
    mpfr_add(rad_.get(), rad_.get(), s.get(), MPFR_RNDU);
}

CBall CBall::root_of_unity(long num, long den, mpfr_prec_t prec) {
    if (den == 0) throw std::invalid_argument("root_of_unity: zero denominator");
    CBall b(prec);
    mpfr_t ang;
    mpfr_init2(ang, prec + 16);
    mpfr_const_pi(ang, MPFR_RNDN);
    mpfr_mul_si(ang, ang, 2 * num, MPFR_RNDN);
    mpfr_div_si(ang, ang, den, MPFR_RNDN);
    mpfr_sin_cos(b.im_.get(), b.re_.get(), ang, MPFR_RNDN);
    mpfr_clear(ang);
    b.bump_rounding();
    return b;
}

CBall CBall::operator-() const {
    CBall b = *this;
    mpfr_neg(b.re_.get(), b.re_.get(), MPFR_RNDN);
    mpfr_neg(b.im_.get(), b.im_.get(), MPFR_RNDN);
    return b;
}

CBall CBall::operator+(const CBall& o) const {
    CBall b(std::max(prec(), o.prec()));
    mpfr_add(b.re_.get(), re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_add(b.im_.get(), im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(b.rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
    b.bump_rounding();
    return b;
}

CBall CBall::operator-(const CBall& o) const { return *this + (-o); }

CBall CBall::operator*(const CBall& o) const {
    CBall b(std::max(prec(), o.prec()));
    mpfr_t t1, t2;
    mpfr_init2(t1, b.prec());
    mpfr_init2(t2, b.prec());
    // re = ar*br - ai*bi
    mpfr_mul(t1, re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_mul(t2, im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_sub(b.re_.get(), t1, t2, MPFR_RNDN);
    // im = ar*bi + ai*br
    mpfr_mul(t1, re_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_mul(t2, im_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_add(b.im_.get(), t1, t2, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    // rad = |a|*rb + |b|*ra + ra*rb
    mpfr_t ra, rb, ma, mb, acc;
    mpfr_inits2(kRadPrec, ra, rb, ma, mb, acc, (mpfr_ptr) 0);
    mpfr_set(ra, rad_.get(), MPFR_RNDU);
    mpfr_set(rb, o.rad_.get(), MPFR_RNDU);
    mpfr_hypot(ma, re_.get(), im_.get(), MPFR_RNDU);
    mpfr_hypot(mb, o.re_.get(), o.im_.get(), MPFR_RNDU);
    mpfr_mul(acc, ma, rb, MPFR_RNDU);
    mpfr_fma(acc, mb, ra, acc, MPFR_RNDU);
    mpfr_fma(acc, ra, rb, acc, MPFR_RNDU);
    mpfr_set(b.rad_.get(), acc, MPFR_RNDU);
    mpfr_clears(ra, rb, ma, mb, acc, (mpfr_ptr) 0);
    b.bump_rounding();
    return b;
}

CBall CBall::operator/(const CBall& o) const {
    double lb = o.abs_lower();
    if (lb <= 0) throw std::domain_error("CBall: division by a ball containing zero");
    CBall b(std::max(prec(), o.prec()));
    mpfr_t t1, t2, den;
    mpfr_init2(t1, b.prec());
    mpfr_init2(t2, b.prec());
    mpfr_init2(den, b.prec());
    // den = br^2 + bi^2
    mpfr_mul(t1, o.re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_mul(t2, o.im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(den, t1, t2, MPFR_RNDN);
    // re = (ar*br + ai*bi)/den
    mpfr_mul(t1, re_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_mul(t2, im_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(b.re_.get(), t1, den, MPFR_RNDN);
    // im = (ai*br - ar*bi)/den
    mpfr_mul(t1, im_.get(), o.re_.get(), MPFR_RNDN);
    mpfr_mul(t2, re_.get(), o.im_.get(), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_div(b.im_.get(), t1, den, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    mpfr_clear(den);
    // rad <= (ra + |a/b|*rb) / (|b| - rb)
    double q = b.abs_upper();
    double num = rad() + q * o.rad();
    double r = num / lb * (1 + 1e-9) + 1e-300;
    mpfr_t rr;
    mpfr_init2(rr, kRadPrec);
    mpfr_set_d(rr, r, MPFR_RNDU);
    mpfr_set(b.rad_.get(), rr, MPFR_RNDU);
    mpfr_clear(rr);
    b.bump_rounding();
    return b;
}

CBall CBall::pow_ui(unsigned long e) const {
    CBall acc = root_of_unity(0, 1, prec());  // exact 1
    CBall base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

CBall CBall::principal_root(unsigned long k) const {
    if (k == 0) throw std::invalid_argument("principal_root: k = 0");
    double lo = abs_lower();
    if (lo <= 0) throw std::domain_error("principal_root: ball contains zero");
    double rel = rad() / lo;
    if (rel > 0.25) throw std::domain_error("principal_root: radius too large");
    CBall b(prec());
    mpfr_t mod, ang, rt;
    mpfr_init2(mod, prec());
    mpfr_init2(ang, prec());
    mpfr_init2(rt, prec());
    mpfr_hypot(mod, re_.get(), im_.get(), MPFR_RNDN);
    mpfr_atan2(ang, im_.get(), re_.get(), MPFR_RNDN);
    mpfr_rootn_ui(rt, mod, k, MPFR_RNDN);
    mpfr_div_ui(ang, ang, k, MPFR_RNDN);
    mpfr_t s, c;
    mpfr_init2(s, prec());
    mpfr_init2(c, prec());
    mpfr_sin_cos(s, c, ang, MPFR_RNDN);
    mpfr_mul(b.re_.get(), rt, c, MPFR_RNDN);
    mpfr_mul(b.im_.get(), rt, s, MPFR_RNDN);
    // |delta root| <= |root| * (rel modulus + angle perturbation) <= |root| * 2 rel
    double rootmag = std::abs(mpfr_get_d(rt, MPFR_RNDU));
    double r = rootmag * 2.0 * rel * (1 + 1e-9) + 1e-300;
    mpfr_set_d(b.rad_.get(), r, MPFR_RNDU);
    mpfr_clears(mod, ang, rt, s, c, (mpfr_ptr) 0);
    b.bump_rounding();
    return b;
}

double CBall::abs_upper() const {
    mpfr_t h;
    mpfr_init2(h, kRadPrec);
    mpfr_hypot(h, re_.get(), im_.get(), MPFR_RNDU);
    mpfr_add(h, h, rad_.get(), MPFR_RNDU);
    double out = mpfr_get_d(h, MPFR_RNDU);
    mpfr_clear(h);
    return out;
}

double CBall::abs_lower() const {
    mpfr_t h;
    mpfr_init2(h, kRadPrec);
    mpfr_hypot(h, re_.get(), im_.get(), MPFR_RNDD);
    mpfr_sub(h, h, rad_.get(), MPFR_RNDD);
    double out = mpfr_get_d(h, MPFR_RNDD);
    mpfr_clear(h);
    return out > 0 ? out : 0;
}

double CBall::dist_upper(const CBall& o) const {
    mpfr_t dr, di, h;
    mpfr_init2(dr, kRadPrec);
    mpfr_init2(di, kRadPrec);
    mpfr_init2(h, kRadPrec);
    mpfr_sub(dr, re_.get(), o.re_.get(), MPFR_RNDA);
    mpfr_sub(di, im_.get(), o.im_.get(), MPFR_RNDA);
    mpfr_hypot(h, dr, di, MPFR_RNDU);
    mpfr_add(h, h, rad_.get(), MPFR_RNDU);
    mpfr_add(h, h, o.rad_.get(), MPFR_RNDU);
    double out = mpfr_get_d(h, MPFR_RNDU);
    mpfr_clears(dr, di, h, (mpfr_ptr) 0);
    return out;
}

double CBall::center_dist_lower(const CBall& o) const {
    mpfr_t dr, di, h;
    mpfr_init2(dr, kRadPrec);
    mpfr_init2(di, kRadPrec);
    mpfr_init2(h, kRadPrec);
    mpfr_sub(dr, re_.get(), o.re_.get(), MPFR_RNDZ);
    mpfr_sub(di, im_.get(), o.im_.get(), MPFR_RNDZ);
    mpfr_hypot(h, dr, di, MPFR_RNDD);
    double out = mpfr_get_d(h, MPFR_RNDD);
    mpfr_clears(dr, di, h, (mpfr_ptr) 0);
    return out;
}

bool CBall::contains(const CBall& o) const {
    // center distance + o.rad <= rad
    mpfr_t dr, di, h;
    mpfr_init2(dr, kRadPrec);
    mpfr_init2(di, kRadPrec);
    mpfr_init2(h, kRadPrec);
    mpfr_sub(dr, re_.get(), o.re_.get(), MPFR_RNDA);
    mpfr_sub(di, im_.get(), o.im_.get(), MPFR_RNDA);
    mpfr_hypot(h, dr, di, MPFR_RNDU);
    mpfr_add(h, h, o.rad_.get(), MPFR_RNDU);
    bool out = mpfr_cmp(h, rad_.get()) <= 0;
    mpfr_clears(dr, di, h, (mpfr_ptr) 0);
    return out;
}

double CBall::rad() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

CBall CBall::midpoint() const {
    CBall out = *this;
    mpfr_set_zero(out.rad_.get(), 1);
    return out;
}

CBall CBall::at_precision(mpfr_prec_t prec) const {
    CBall out(prec);
    mpfr_set(out.re_.get(), re_.get(), MPFR_RNDN);
    mpfr_set(out.im_.get(), im_.get(), MPFR_RNDN);
    mpfr_set(out.rad_.get(), rad_.get(), MPFR_RNDU);
    out.bump_rounding();
    return out;
}

std::string CBall::to_string(int digits) const {
    return "(" + re_.to_string(digits) + (im_.sign() < 0 ? " - " : " + ") + "i*" +
           (im_.sign() < 0 ? MpReal(im_).to_string(digits).substr(1) : im_.to_string(digits)) +
           " +/- " + rad_.to_string(3) + ")";
}

CBall inflate(const CBall& b, double extra) {
    CBall out = b;
    mpfr_t e;
    mpfr_init2(e, 32);
    mpfr_set_d(e, extra, MPFR_RNDU);
    mpfr_add(out.rad_.get(), out.rad_.get(), e, MPFR_RNDU);
    mpfr_clear(e);
    return out;
}

}  // namespace mwl

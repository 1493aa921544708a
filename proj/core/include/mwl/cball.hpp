#pragma once

#include <mpfr.h>

#include <string>

#include "mwl/rational.hpp"

namespace mwl {

// Arbitrary-precision real, RAII over mpfr_t.
class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    MpReal(MpReal&& o) noexcept { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_swap(v_, o.v_); }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    std::string to_string(int digits = 20) const;

private:
    mpfr_t v_;
};

// Complex ball: center at working precision, radius a 32-bit upper bound.
// All radius arithmetic rounds up; operation results are guaranteed to
// contain the exact value whenever the inputs do.
class CBall {
public:
    explicit CBall(mpfr_prec_t prec = 64);
    CBall(const Rational& re, const Rational& im, mpfr_prec_t prec);
    static CBall from_rational(const Rational& q, mpfr_prec_t prec) {
        return CBall(q, Rational(0), prec);
    }
    static CBall from_doubles(double re, double im, double rad, mpfr_prec_t prec);
    // Parse decimal strings; the parse error is folded into the radius.
    static CBall from_strings(const std::string& re, const std::string& im,
                              const std::string& rad, mpfr_prec_t prec);
    // exp(2*pi*i*num/den)
    static CBall root_of_unity(long num, long den, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return re_.prec(); }

    CBall operator-() const;
    CBall operator+(const CBall& o) const;
    CBall operator-(const CBall& o) const;
    CBall operator*(const CBall& o) const;
    CBall operator/(const CBall& o) const;  // requires o definitely nonzero
    CBall& operator+=(const CBall& o) { return *this = *this + o; }
    CBall squared() const { return *this * *this; }
    CBall pow_ui(unsigned long e) const;

    // Principal k-th root (branch cut on the negative real axis); requires a
    // relative radius < 1/4.
    CBall principal_root(unsigned long k) const;

    double abs_upper() const;
    double abs_lower() const;  // 0 when the ball contains 0
    bool contains_zero() const { return abs_lower() <= 0; }
    bool definitely_nonzero() const { return abs_lower() > 0; }
    // |this - o| upper bound
    double dist_upper(const CBall& o) const;
    double center_dist_lower(const CBall& o) const;
    bool overlaps(const CBall& o) const {
        return center_dist_lower(o) <= rad() + o.rad();
    }
    bool contains(const CBall& o) const;  // o entirely inside this ball

    double rad() const;
    double re_d() const { return re_.to_double(); }
    double im_d() const { return im_.to_double(); }
    const MpReal& re() const { return re_; }
    const MpReal& im() const { return im_; }

    CBall midpoint() const;                     // same center, zero radius
    CBall at_precision(mpfr_prec_t prec) const; // center re-rounded, radius kept

    std::string to_string(int digits = 17) const;

private:
    MpReal re_, im_;
    MpReal rad_;  // 32-bit, always an upper bound
    void bump_rounding();
    friend CBall inflate(const CBall& b, double extra);
};

CBall inflate(const CBall& b, double extra);

}  // namespace mwl

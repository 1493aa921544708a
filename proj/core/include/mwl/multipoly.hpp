#pragma once

#include <map>
#include <string>
#include <vector>

#include "mwl/poly.hpp"
#include "mwl/rational.hpp"

namespace mwl {

// Sparse multivariate polynomial over Q. Terms map exponent vectors (one slot
// per variable, non-negative) to nonzero rational coefficients. Operations on
// polynomials with different variable lists first merge the lists.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(Rational(c)) {}
    explicit MultiPoly(const Rational& c) {
        if (!c.is_zero()) terms_[{}] = c;
    }
    static MultiPoly variable(const std::string& name);
    static MultiPoly constant(const Rational& c) { return MultiPoly(c); }

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    size_t term_count() const { return terms_.size(); }

    bool has_var(const std::string& v) const;
    int degree(const std::string& var) const;  // -1 only for the zero polynomial
    int total_degree() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly operator*(const Rational& s) const;
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return (a - b).is_zero();
    }

    MultiPoly pow(int e) const;

    // Coefficient of var^k, as a polynomial not involving var.
    MultiPoly coeff_of(const std::string& var, int k) const;
    // Substitute a polynomial (or value) for a variable.
    MultiPoly substitute(const std::string& var, const MultiPoly& value) const;
    Rational eval(const std::map<std::string, Rational>& point) const;

    Rational content() const;  // gcd of coefficients (0 for zero polynomial)
    MultiPoly primitive() const;

    // Exact division; throws std::domain_error if b does not divide *this.
    friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b);

    // Conversions with univariate dense form. to_qpoly requires that no other
    // variable occurs.
    QPoly to_qpoly(const std::string& var) const;
    static MultiPoly from_qpoly(const QPoly& p, const std::string& var);

    // Ensure the list of variables contains vs (reindexes terms).
    MultiPoly with_vars(const std::vector<std::string>& vs) const;
    static std::vector<std::string> merged_vars(const MultiPoly& a, const MultiPoly& b);

private:
    void prune();
    std::vector<std::string> vars_;              // ordered
    std::map<std::vector<int>, Rational> terms_; // exponent vector -> coefficient
};

// Resultant of p and q with respect to var, eliminating it. Subresultant PRS;
// the Sylvester determinant is the independent test oracle.
// If exactly one input has degree 0 in var, returns that input raised to the
// other's degree; errors if var is absent from both.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// Resultant of univariate rational polynomials.
Rational resultant_q(const QPoly& p, const QPoly& q);

}  // namespace mwl

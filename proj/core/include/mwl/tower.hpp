#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwl/cball.hpp"
#include "mwl/multipoly.hpp"
#include "mwl/poly.hpp"

namespace mwl {

// Raised when the hybrid zero test cannot decide at the maximal precision.
struct UndecidedZeroTest : std::runtime_error {
    explicit UndecidedZeroTest(const std::string& what) : std::runtime_error(what) {}
};
struct TowerMismatch : std::invalid_argument {
    explicit TowerMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;
class TowerElement;

struct TowerLevel {
    enum class Kind { Cyclotomic, Radical, Generic };
    std::string name;
    // minpoly[j] is the coefficient of gen^j, a reduced polynomial in the
    // lower generators; monic of degree `degree`.
    std::vector<MultiPoly> minpoly;
    int degree = 0;
    CBall embedding;  // isolates the chosen root among the level's conjugates
    bool irreducible_verified = false;
    Kind kind = Kind::Generic;
    long cyc_n = 0;        // Cyclotomic
    int rad_k = 0;         // Radical: gen^k = rad_base
    MultiPoly rad_base;    // Radical
};

// Immutable tower of simple extensions of Q. Elements are reduced
// multivariate polynomials in the generators.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
public:
    static TowerPtr rationals();

    // Extend by a primitive n-th root of unity (generator name z<n>).
    TowerPtr with_cyclotomic(long n) const;
    // Extend by a k-th root of `base`; branch defaults to the positive real
    // root when one exists, else the root of smallest non-negative argument.
    TowerPtr with_radical(const std::string& name, const TowerElement& base, int k,
                          std::optional<CBall> branch = std::nullopt) const;
    // Extend by a root of an explicit monic minimal polynomial (ascending
    // coefficients over this tower); for data ingestion.
    TowerPtr with_generic(const std::string& name, const std::vector<TowerElement>& minpoly,
                          const CBall& ball) const;
    // Append a copy of a level from another tower (generators it references
    // must already be present).
    TowerPtr with_level(const TowerLevel& level) const;

    const std::vector<TowerLevel>& levels() const { return levels_; }
    long total_degree() const;
    bool all_verified() const;
    int level_index(const std::string& name) const;  // -1 when absent
    std::vector<std::string> gen_names() const;
    MultiPoly level_minpoly(int i) const;  // as polynomial in the level generator

    TowerElement zero() const;
    TowerElement one() const;
    TowerElement from_rational(const Rational& q) const;
    TowerElement gen(const std::string& name) const;
    TowerElement gen_pow(const std::string& name, long e) const;  // negative e inverts
    TowerElement element(const MultiPoly& rep) const;

    MultiPoly reduce(MultiPoly p) const;
    // Generator balls, lowest level first, at the given precision.
    std::vector<CBall> generator_balls(mpfr_prec_t prec) const;

private:
    friend class TowerElement;
    std::vector<TowerLevel> levels_;
};

class TowerElement {
public:
    TowerElement() : rep_() {}
    TowerElement(int c) : rep_(Rational(c)) {}
    TowerElement(const Rational& q) : rep_(q) {}
    TowerElement(TowerPtr tower, MultiPoly rep);

    const TowerPtr& tower() const { return tower_; }
    const MultiPoly& rep() const { return rep_; }

    // exact reduction to zero decides immediately; otherwise the hybrid
    // embedding test at escalating precision (64..4096 bits)
    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const;

    TowerElement operator-() const;
    TowerElement& operator+=(const TowerElement& o);
    TowerElement& operator-=(const TowerElement& o);
    friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
    friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
    friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
    TowerElement operator*(const Rational& s) const;
    friend bool operator==(const TowerElement& a, const TowerElement& b) {
        return (a - b).is_zero();
    }

    TowerElement inverse() const;
    TowerElement pow(long e) const;

    CBall embed(mpfr_prec_t prec) const;

    std::string to_string() const;

private:
    static TowerPtr join(const TowerPtr& a, const TowerPtr& b);
    TowerPtr tower_;  // null: rational constant usable with any tower
    MultiPoly rep_;   // reduced
};

// Spec-level constructors.
TowerPtr make_cyclotomic(long n);
TowerPtr adjoin_radical(const TowerPtr& tower, const TowerElement& base, int k,
                        std::optional<CBall> branch = std::nullopt,
                        const std::string& name = "");

// Monic minimal polynomial over Q by iterated resultants, square-free
// reduction and embedding-guided factor selection.
QPoly minimal_polynomial(const TowerElement& x, long degree_bound = 64);

// Re-interpret an element in a tower that contains (by name, with identical
// relations) every generator the element uses.
TowerElement transport(const TowerElement& x, const TowerPtr& target);

// Cyclotomic polynomial, n >= 1.
QPoly cyclotomic_polynomial(long n);

// Starting precision of the hybrid zero-test escalation ladder
// (64 -> 256 -> 1024 -> 4096); clamped to [64, 4096].
void set_min_embed_precision(long bits);
long min_embed_precision();

// Syntactic zero (reduced representation is the zero polynomial); containers
// prune with this instead of the hybrid semantic test.
inline bool cheap_zero(const TowerElement& v) { return v.rep().is_zero(); }

}  // namespace mwl

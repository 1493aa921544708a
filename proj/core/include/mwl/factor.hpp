#pragma once

#include <utility>
#include <vector>

#include "mwl/poly.hpp"

namespace mwl {

enum class FactorStatus { ProvenIrreducible, Unresolved };

struct Factor {
    QPoly poly;  // monic
    int multiplicity = 1;
    FactorStatus status = FactorStatus::Unresolved;
};

// p = unit * prod factors[i].poly ^ factors[i].multiplicity, exactly.
struct Factorization {
    Rational unit;
    std::vector<Factor> factors;

    QPoly product() const;
};

// Partial factorization over Q: square-free decomposition, rational-root
// extraction, substitution detection p(x) = Psi(x^k) with small-degree Psi
// factored in closed form, and an Eisenstein test to certify irreducibility.
// Factors beyond the reach of these strategies are flagged Unresolved.
Factorization structured_factor(const QPoly& p);

// Verification mode: does unit * prod fi^mi equal p exactly?
bool verify_factorization(const QPoly& p, const Rational& unit,
                          const std::vector<std::pair<QPoly, int>>& factors);

// (Psi, k) with p(x) = Psi(x^k) for the maximal k >= 1; constants give k = 0.
std::pair<QPoly, int> detect_substitution(const QPoly& p);

// True if the monic polynomial is certified irreducible over Q by the
// structured strategies (degree <= 4 closed forms or Eisenstein).
bool proves_irreducible(const QPoly& monic_p);

// Scale a rational-coefficient polynomial to primitive integer coefficients
// with positive leading coefficient.
QPoly to_primitive_integer(const QPoly& p);

}  // namespace mwl

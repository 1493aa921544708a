#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwl/multipoly.hpp"
#include "mwl/section.hpp"
#include "mwl/surface.hpp"

namespace mwl {

// Section ansatz: numerators in v with symbolic coefficient slots, divided by
// powers of a unit parameter. Slots may be free symbols, fixed rationals, or
// powers of the unit.
struct Ansatz {
    MultiPoly x_num, y_num;   // polynomials in "v", the symbols, and the unit
    int x_den_upow = 0;       // x = x_num / u^x_den_upow
    int y_den_upow = 0;
    std::string unit;         // "" when the ansatz has no unit parameter
    std::vector<std::string> symbols;  // coefficient symbols, elimination order
    std::string survivor;
    int collapse_power = 0;            // substitute unit^k -> collapsed_name
    std::string collapsed_name;
};

struct CoefficientSystem {
    SurfaceModel surface = SurfaceModel(2, 1);
    Ansatz ansatz;
    std::vector<MultiPoly> equations;  // sign/content-normalized vanishing conditions

    struct LinearSolve {
        std::string symbol;
        MultiPoly numerator;  // symbol = numerator / denom
        Rational denom;
    };
    // filled by prepare_elimination
    std::vector<LinearSolve> linear;
    std::vector<std::string> resultant_order;
    std::vector<std::vector<MultiPoly>> stages;  // equations before each resultant step
    std::vector<MultiPoly> final_eqs;            // univariate in the survivor
};

// Expand y^2 - x^3 - v^a(v^b+1), clear unit denominators, and collect the
// coefficient of each power of v.
CoefficientSystem build_system(const SurfaceModel& s, const Ansatz& z);

// Run the elimination (constant-coefficient linear solves, then all-pairs
// resultants) down to the survivor; records the stage systems for exact
// back-substitution.
void prepare_elimination(CoefficientSystem& sys, const std::string& survivor);

// Eliminant of the system: gcd of the univariate chain results, monomial
// factors stripped, square-free, certified against numeric back-substitution.
QPoly fundamental_polynomial(CoefficientSystem sys, const std::string& survivor);

// Exact solution of the remaining symbols for a root of the fundamental
// polynomial; hints pre-assign symbols whose value is not determined by the
// triangular structure (discrete branch choices).
std::map<std::string, TowerElement> back_substitute(
    const CoefficientSystem& sys, const std::string& survivor, const TowerElement& root,
    const std::map<std::string, TowerElement>& hints = {});

// Build the section from a solved assignment (substitutes slot values into
// the ansatz and divides by the unit powers).
Section section_from_assignment(const CoefficientSystem& sys,
                                const std::map<std::string, TowerElement>& values,
                                const TowerElement& unit_value);

// Convenience wrapper: back_substitute + section_from_assignment + verify.
Section section_from_root(const CoefficientSystem& sys, const TowerElement& root,
                          const std::map<std::string, TowerElement>& hints = {},
                          std::optional<TowerElement> unit_value = std::nullopt);

// Roots of a complex-coefficient polynomial (Durand-Kerner; ascending
// coefficients). Test oracle and extraneous-factor certification only.
std::vector<std::complex<double>> complex_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace mwl

#pragma once

#include <optional>
#include <string>

#include "mwl/laurent.hpp"
#include "mwl/surface.hpp"
#include "mwl/tower.hpp"

namespace mwl {

using TLaurent = LaurentPoly<TowerElement>;
using TPoly = Poly<TowerElement>;

// A point of the generic fiber with Laurent-polynomial coordinates over a
// number-field tower.
struct Section {
    SurfaceModel surface = SurfaceModel(2, 1);
    TowerPtr tower;
    TLaurent x, y;
    std::string provenance = "derived-from-root";

    Section negate() const {
        Section out = *this;
        out.y = -out.y;
        return out;
    }
};

// B(v) of the surface equation y^2 = x^3 + B(v), as a Laurent polynomial.
TLaurent surface_rhs(const SurfaceModel& s);

// Exact check of y^2 - x^3 - B(v) = 0 over the tower.
bool verify_section(const Section& q);

// Coefficient reversal onto the partner surface (x'_i = A_{2n-i}, y'_j = B_{3n-j}).
Section apply_partner_map(const Section& q);

// Chord-tangent addition on the generic fiber. Returns a section only when
// the sum again has Laurent-polynomial coordinates (exact divisions happen to
// succeed); nullopt otherwise.
std::optional<Section> add_sections(const Section& p, const Section& q);

// Structural equality of coordinates (exact, hybrid zero tests).
bool same_section(const Section& p, const Section& q);

}  // namespace mwl

#pragma once

#include "mwl/systems.hpp"

namespace mwl {

// The documented section ansatz of each base surface ((2,1), (1,2), (2,2),
// (1,3), (1,4)); partner surfaces map through apply_partner_map.
Ansatz ansatz_for(const SurfaceModel& s);

// Ansatz used by the fundamental-polynomial pipeline; for (2,2) this is the
// unit-parameterized shape whose eliminant is (2u^3-1)(u^3+4).
Ansatz fundpoly_ansatz_for(const SurfaceModel& s);

CoefficientSystem system_for(const SurfaceModel& s);

// Fundamental polynomial of the surface (partner surfaces delegate to their
// partner and share its splitting data).
QPoly fundpoly_for(const SurfaceModel& s);

struct DerivedBasis {
    SurfaceModel surface = SurfaceModel(2, 1);
    std::vector<Section> sections;
};

// The default generator basis reproducing the reference Gram matrices.
DerivedBasis derive_basis(const SurfaceModel& s);

// All minimal sections of the documented shape (used by subset-search and
// exhaustive root-extension checks): (2,1) gives 12, (1,2) 24, (2,2) 12,
// (1,3) the 9 sections of the first radical branch.
std::vector<Section> derive_minimal_sections(const SurfaceModel& s);

// Towers used by the drivers.
TowerPtr tower_k1();        // Q(zeta_3)
TowerPtr tower_k2();        // Q(zeta_12, beta1, beta2)
TowerPtr tower_k2_prime();  // Q(zeta_3, 2^(1/3))
TowerPtr tower_k3();        // Q(zeta_9, (16 A_1)^(1/9))
TowerPtr tower_k24();       // Q(zeta_24)
TowerPtr tower_k4();        // Q(zeta_24, (22 + 9 sqrt6)^(1/6))

// Elements of Q(zeta_9): the three roots of A^3 - 84A^2 - 159A - 1.
std::vector<TowerElement> e13_cubic_roots(const TowerPtr& z9tower);

// sqrt2, sqrt3, sqrt6, i inside Q(zeta_24).
TowerElement sqrt2_in_z24(const TowerPtr& t);
TowerElement sqrt3_in_z24(const TowerPtr& t);
TowerElement sqrt6_in_z24(const TowerPtr& t);
TowerElement i_in_z24(const TowerPtr& t);

}  // namespace mwl

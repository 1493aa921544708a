#pragma once

#include <string>
#include <vector>

#include "mwl/rational.hpp"

namespace mwl {

enum class KodairaType { II, IV, I0star, IVstar };
enum class RootLattice { None, A2, D4, E6 };

std::string to_string(KodairaType t);
std::string to_string(RootLattice l);

struct FiberInfo {
    enum class Place { Zero, RootOfUnity, Infinity };
    Place place;
    int root_index = 0;  // which root of v^b = -1 (Place::RootOfUnity only)
    int vanishing_order = 0;
    KodairaType kodaira;
    RootLattice lattice;
    int component_count = 0;  // m_v

    std::string place_string() const;
};

struct LatticeType {
    int rank = 0;
    std::string name;      // A2v(1/2), D4v, A2v+A2v, E6v, E8, K3-rank16
    Rational discriminant;
};

// The surface y^2 = x^3 + v^a (v^b + 1); rational for a+b <= 6, K3 for
// 6 < a+b <= 12.
struct SurfaceModel {
    int a = 0;
    int b = 1;

    SurfaceModel(int a_, int b_);
    static SurfaceModel master();  // marker for Y^2 = X^3 + t^360 + 1 (b = 0)

    bool is_master() const { return b == 0; }
    bool is_k3() const { return a + b > 6; }
    int n() const { return (a + b + 5) / 6; }                 // ceil((a+b)/6)
    int a_partner() const { return 6 * n() - (a + b); }
    int chi() const { return is_k3() ? 2 : 1; }
    // base-change degree to the master surface, when b divides 360
    int master_exponent() const;

    std::string name() const;
    friend bool operator==(const SurfaceModel& s, const SurfaceModel& t) {
        return s.a == t.a && s.b == t.b;
    }
};

std::vector<FiberInfo> classify_fibers(const SurfaceModel& s);
int shioda_tate_rank(const SurfaceModel& s);
LatticeType lattice_type(const SurfaceModel& s);

struct PartnerMap {
    SurfaceModel partner;
    std::string forward;   // textual description of the coordinate map
    std::string inverse;
};
PartnerMap birational_partner(const SurfaceModel& s);

// order -> (type, lattice, component count); order must be 1..4
FiberInfo fiber_from_order(int order);

}  // namespace mwl

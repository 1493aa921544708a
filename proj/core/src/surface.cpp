#include "mwl/surface.hpp"

#include <numeric>
#include <stdexcept>

namespace mwl {

std::string to_string(KodairaType t) {
    switch (t) {
        case KodairaType::II: return "II";
        case KodairaType::IV: return "IV";
        case KodairaType::I0star: return "I0*";
        case KodairaType::IVstar: return "IV*";
    }
    return "?";
}

std::string to_string(RootLattice l) {
    switch (l) {
        case RootLattice::None: return "-";
        case RootLattice::A2: return "A2";
        case RootLattice::D4: return "D4";
        case RootLattice::E6: return "E6";
    }
    return "?";
}

std::string FiberInfo::place_string() const {
    switch (place) {
        case Place::Zero: return "v=0";
        case Place::Infinity: return "v=inf";
        case Place::RootOfUnity: return "v^b=-1 root " + std::to_string(root_index);
    }
    return "?";
}

SurfaceModel::SurfaceModel(int a_, int b_) : a(a_), b(b_) {
    if (b < 1 || a < 0) throw std::invalid_argument("surface: need a >= 0, b >= 1");
    // coprimality, with the members of the rank-68 decomposition that bend the
    // rule admitted explicitly: a = 0 (v^b + 1 is square-free) and (2,2)
    bool coprime = std::gcd(a, b) == 1;
    if (a > 0 && !coprime && !(a == 2 && b == 2))
        throw std::invalid_argument("surface: a and b must be coprime");
    if (a + b > 12) throw std::invalid_argument("surface: a+b must be at most 12");
}

SurfaceModel SurfaceModel::master() {
    SurfaceModel s(0, 1);
    s.b = 0;  // marker
    return s;
}

int SurfaceModel::master_exponent() const {
    if (is_master()) return 1;
    if (360 % b != 0) throw std::domain_error("surface: b does not divide 360");
    return 360 / b;
}

std::string SurfaceModel::name() const {
    if (is_master()) return "E(t^360)";
    return "E(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

FiberInfo fiber_from_order(int order) {
    FiberInfo f;
    f.vanishing_order = order;
    switch (order) {
        case 1: f.kodaira = KodairaType::II; f.lattice = RootLattice::None; f.component_count = 1; break;
        case 2: f.kodaira = KodairaType::IV; f.lattice = RootLattice::A2; f.component_count = 3; break;
        case 3: f.kodaira = KodairaType::I0star; f.lattice = RootLattice::D4; f.component_count = 5; break;
        case 4: f.kodaira = KodairaType::IVstar; f.lattice = RootLattice::E6; f.component_count = 7; break;
        default:
            // order 5 (type II*) never occurs for the coprime family with
            // a <= 5, a' <= 5; orders >= 6 are non-minimal
            throw std::domain_error("fiber order " + std::to_string(order) + " not supported");
    }
    return f;
}

std::vector<FiberInfo> classify_fibers(const SurfaceModel& s) {
    if (s.is_master()) throw std::invalid_argument("classify_fibers: use a sub-surface");
    std::vector<FiberInfo> out;
    if (s.a > 0) {
        FiberInfo f = fiber_from_order(s.a);
        f.place = FiberInfo::Place::Zero;
        out.push_back(f);
    }
    for (int i = 0; i < s.b; ++i) {
        FiberInfo f = fiber_from_order(1);
        f.place = FiberInfo::Place::RootOfUnity;
        f.root_index = i;
        out.push_back(f);
    }
    int ap = 6 * s.n() - (s.a + s.b);
    if (ap > 0) {
        FiberInfo f = fiber_from_order(ap);
        f.place = FiberInfo::Place::Infinity;
        out.push_back(f);
    }
    return out;
}

int shioda_tate_rank(const SurfaceModel& s) {
    int corr = 0;
    for (const auto& f : classify_fibers(s)) corr += f.component_count - 1;
    if (!s.is_k3()) return 8 - corr;
    // Delsarte-type rank formula, exercised by the paper only for (1,10)
    int d = s.a + s.b;
    return 2 * d - 2 - 4 * (d / 6) - corr;
}

LatticeType lattice_type(const SurfaceModel& s) {
    auto mk = [](int rank, const std::string& name, Rational disc) {
        return LatticeType{rank, name, disc};
    };
    if (s.is_k3()) {
        if (s.a == 1 && s.b == 10) return mk(16, "K3-rank16", Rational(625));
        throw std::invalid_argument("lattice_type: unsupported K3 surface " + s.name());
    }
    int aa = s.a, ap = s.a_partner();
    if (aa > ap) std::swap(aa, ap);
    if (aa == 2 && ap == 3) return mk(2, "A2v(1/2)", Rational(1, 12));
    if ((aa == 1 || aa == 0) && ap == 3) return mk(4, "D4v", Rational(1, 4));
    if (aa == 2 && ap == 2) return mk(4, "A2v+A2v", Rational(1, 9));
    if ((aa == 1 || aa == 0) && ap == 2) return mk(6, "E6v", Rational(1, 3));
    if (ap <= 1) return mk(8, "E8", Rational(1));
    throw std::invalid_argument("lattice_type: unsupported surface " + s.name());
}

PartnerMap birational_partner(const SurfaceModel& s) {
    if (s.is_master()) throw std::invalid_argument("birational_partner: use a sub-surface");
    int n = s.n();
    SurfaceModel p(s.a_partner(), s.b);
    std::string n2 = std::to_string(2 * n), n3 = std::to_string(3 * n);
    return PartnerMap{
        p,
        "(x, y, v) -> (v^" + n2 + " x, v^" + n3 + " y, 1/v)",
        "(X, Y, u) -> (u^-" + n2 + " X, u^-" + n3 + " Y, 1/u)",
    };
}

}  // namespace mwl

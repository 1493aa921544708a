#include "mwl/basechange.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mwl/derive.hpp"

namespace mwl {

bool MasterPoint::verify() const {
    TLaurent rhs = TLaurent::monomial(TowerElement(1), 360) + TLaurent(TowerElement(1));
    return (Y * Y - X * X * X - rhs).reduces_to_zero();
}

MasterPoint lift_to_master(const Section& q, int origin_index) {
    if (q.surface.is_master()) throw std::invalid_argument("lift_to_master: already lifted");
    int k = q.surface.master_exponent();
    int a = q.surface.a;
    if ((k * a) % 3 != 0 || (k * a) % 2 != 0)
        throw std::domain_error("lift_to_master: non-integral exponent shift");
    int sx = k * a / 3, sy = k * a / 2;
    MasterPoint p;
    p.tower = q.tower;
    p.origin = q.surface;
    p.origin_index = origin_index;
    p.k = k;
    for (const auto& [i, c] : q.x.terms()) p.X = p.X + TLaurent::monomial(c, k * i - sx);
    for (const auto& [j, c] : q.y.terms()) p.Y = p.Y + TLaurent::monomial(c, k * j - sy);
    return p;
}

GramMatrix scale_block(int m, const GramMatrix& g) {
    GramMatrix out = g;
    for (auto& row : out.entries)
        for (auto& e : row) e *= Rational(m);
    return out;
}

Rational BlockGram::Block::block_det() const {
    return Rational(scale).pow(rank()) * det(base);
}

int BlockGram::total_rank() const {
    int r = 0;
    for (const auto& b : blocks) r += b.rank();
    return r;
}

Rational BlockGram::total_det() const {
    Rational d(1);
    for (const auto& b : blocks) d *= b.block_det();
    return d;
}

std::map<Integer, int> BlockGram::factorization() const { return factor_rational(total_det()); }

BlockGram assemble_m68(const std::vector<BlockGram::Block>& blocks) {
    // expected multiset of (scale, rank): 360M1 x2, 180M2 x2, 180M2' x1,
    // 120M3 x2, 90M4 x1, 72M5 x2, 36M10 x1
    std::multiset<std::pair<int, int>> expected{
        {360, 2}, {360, 2}, {180, 4}, {180, 4}, {180, 4}, {120, 6},
        {120, 6}, {90, 8},  {72, 8},  {72, 8},  {36, 16},
    };
    std::multiset<std::pair<int, int>> got;
    for (const auto& b : blocks) got.insert({b.scale, b.rank()});
    if (blocks.size() != 11 || got != expected) {
        int r = 0;
        for (const auto& b : blocks) r += b.rank();
        throw std::invalid_argument("assemble_m68: block layout invalid (rank sum " +
                                    std::to_string(r) + ", expected the eleven-block layout)");
    }
    BlockGram out;
    out.blocks = blocks;
    return out;
}

Rational expected_master_det() {
    return Rational(Integer(2)).pow(152) * Rational(Integer(3)).pow(118) *
           Rational(Integer(5)).pow(40);
}

bool MasterReport::all_points_verified() const {
    return std::all_of(points.begin(), points.end(),
                       [](const PointStatus& p) { return p.verified; });
}

MasterReport assemble_master(const std::vector<Section>& data_05,
                             const std::vector<Section>& data_15,
                             const std::vector<Section>& data_110) {
    MasterReport rep;
    std::vector<BlockGram::Block> blocks;
    int index = 1;

    auto add_derived = [&](const SurfaceModel& s, int scale, const std::string& label) {
        DerivedBasis basis = derive_basis(s);
        for (size_t i = 0; i < basis.sections.size(); ++i) {
            MasterPoint p = lift_to_master(basis.sections[i], static_cast<int>(i));
            rep.points.push_back({index++, s.name(), p.verify()});
        }
        blocks.push_back({label, scale, gram(basis.sections), false});
    };

    add_derived(SurfaceModel(2, 1), 360, "360*M1 (2,1)");
    add_derived(SurfaceModel(3, 1), 360, "360*M1 (3,1)");
    add_derived(SurfaceModel(1, 2), 180, "180*M2 (1,2)");
    add_derived(SurfaceModel(3, 2), 180, "180*M2 (3,2)");
    add_derived(SurfaceModel(2, 2), 180, "180*M2' (2,2)");
    add_derived(SurfaceModel(1, 3), 120, "120*M3 (1,3)");
    add_derived(SurfaceModel(2, 3), 120, "120*M3 (2,3)");
    add_derived(SurfaceModel(1, 4), 90, "90*M4 (1,4)");

    auto add_data = [&](const std::vector<Section>& data, const SurfaceModel& s, int scale,
                        size_t expect, const GramMatrix& fixture, const std::string& label) {
        if (!data.empty()) {
            if (data.size() != expect)
                throw std::invalid_argument("assemble_master: " + s.name() + " needs " +
                                            std::to_string(expect) + " sections");
            for (size_t i = 0; i < data.size(); ++i) {
                MasterPoint p = lift_to_master(data[i], static_cast<int>(i));
                rep.points.push_back({index++, s.name(), p.verify()});
            }
            // heights on the E8 data surfaces and the K3 surface are out of
            // scope for direct computation; the printed Gram matrices are the
            // block fixtures either way
            blocks.push_back({label, scale, fixture, true});
        } else {
            blocks.push_back({label + " [fixture]", scale, fixture, true});
            rep.notes.push_back(s.name() + ": no section data supplied; Gram block from fixture");
        }
    };
    add_data(data_05, SurfaceModel(0, 5), 72, 8, fixture_m5(), "72*M5 (0,5)");
    add_data(data_15, SurfaceModel(1, 5), 72, 8, fixture_m5(), "72*M5 (1,5)");
    add_data(data_110, SurfaceModel(1, 10), 36, 16, fixture_m10(), "36*M10 (1,10)");

    rep.blocks = assemble_m68(blocks);
    rep.rank_sum = rep.blocks.total_rank();
    rep.determinant = rep.blocks.total_det();
    rep.factorization = rep.blocks.factorization();
    rep.det_matches = rep.determinant == expected_master_det();
    rep.complete = rep.points.size() == 68 && rep.all_points_verified();
    if (rep.points.size() != 68)
        rep.notes.push_back("partial assembly: " + std::to_string(rep.points.size()) +
                            " of 68 points derived");
    return rep;
}

bool gram_equivalent_perm_sign(const GramMatrix& a, const GramMatrix& b) {
    int n = a.rank();
    if (b.rank() != n) return false;
    std::vector<int> perm;
    std::vector<int> sign;
    std::vector<bool> used(n, false);
    std::function<bool(int)> bt = [&](int i) -> bool {
        if (i == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c] || a.entries[c][c] != b.entries[i][i]) continue;
            for (int s : {1, -1}) {
                bool ok = true;
                for (int j = 0; j < i && ok; ++j) {
                    Rational v = a.entries[c][perm[j]] * Rational(s * sign[j]);
                    if (v != b.entries[i][j]) ok = false;
                }
                if (!ok) continue;
                used[c] = true;
                perm.push_back(c);
                sign.push_back(s);
                if (bt(i + 1)) return true;
                used[c] = false;
                perm.pop_back();
                sign.pop_back();
            }
        }
        return false;
    };
    return bt(0);
}

}  // namespace mwl

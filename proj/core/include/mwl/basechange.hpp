#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwl/heights.hpp"
#include "mwl/section.hpp"

namespace mwl {

// A point of Y^2 = X^3 + t^360 + 1 obtained by base change from a sub-surface
// section.
struct MasterPoint {
    TLaurent X, Y;  // Laurent polynomials in t over the tower
    TowerPtr tower;
    SurfaceModel origin = SurfaceModel(2, 1);
    int origin_index = 0;  // position within its block
    int k = 0;             // v = t^k

    bool verify() const;
};

// X(t) = sum A_i t^(k(i - a/3)), Y(t) = sum B_j t^(k(j - a/2)) with k = 360/b.
MasterPoint lift_to_master(const Section& q, int origin_index = 0);

// <P_i, P_j> on the master surface = m <Q_i, Q_j> on the sub-surface.
GramMatrix scale_block(int m, const GramMatrix& g);

struct BlockGram {
    struct Block {
        std::string label;
        int scale = 1;
        GramMatrix base;  // unscaled sub-surface Gram
        bool fixture = false;

        int rank() const { return base.rank(); }
        Rational block_det() const;
    };
    std::vector<Block> blocks;

    int total_rank() const;
    Rational total_det() const;
    std::map<Integer, int> factorization() const;
};

// Validates the eleven-block layout (ranks summing to 68) and assembles the
// block-diagonal Gram data.
BlockGram assemble_m68(const std::vector<BlockGram::Block>& blocks);

// det(M68) = 2^152 * 3^118 * 5^40
Rational expected_master_det();

struct MasterReport {
    struct PointStatus {
        int index = 0;
        std::string origin;
        bool verified = false;
    };
    std::vector<PointStatus> points;
    BlockGram blocks;
    int rank_sum = 0;
    Rational determinant;
    std::map<Integer, int> factorization;
    bool det_matches = false;
    bool complete = false;  // all 68 points present and verified
    std::vector<std::string> notes;

    bool all_points_verified() const;
};

// Lift the derivable bases ((2,1), (3,1), (1,2), (3,2), (2,2), (1,3), (2,3),
// (1,4)), add ingested data when supplied, verify every point, and assemble
// the block Gram with fixtures standing in for absent data blocks.
MasterReport assemble_master(const std::vector<Section>& data_05,
                             const std::vector<Section>& data_15,
                             const std::vector<Section>& data_110);

// Reference matrices as printed in the source material.
GramMatrix fixture_m1();
GramMatrix fixture_m2();
GramMatrix fixture_m2_prime();
GramMatrix fixture_m3();
GramMatrix fixture_m4();
GramMatrix fixture_m5();
GramMatrix fixture_m10();

// Gram equality up to simultaneous row/column permutation and per-vector sign.
bool gram_equivalent_perm_sign(const GramMatrix& a, const GramMatrix& b);

}  // namespace mwl

#pragma once

#include <vector>

#include "mwl/section.hpp"

namespace mwl {

struct GramMatrix {
    std::vector<std::vector<Rational>> entries;

    int rank() const { return static_cast<int>(entries.size()); }
    bool symmetric() const;
};

// Exact determinant by Bareiss fraction-free elimination.
Rational det(const GramMatrix& g);
Rational bareiss_det(std::vector<std::vector<Rational>> m);
// All leading principal minors positive.
bool positive_definite(const GramMatrix& g);

// Local contribution of a pair of sections at a fiber (table lookup keyed by
// Kodaira type and component assignment; sections through the identity
// component contribute 0).
Rational local_contribution(const Section& p, const Section& q, const FiberInfo& fiber);

// (P.Q) on the smooth model: common zeros of the coordinate differences,
// with resolution corrections at the singular points of additive fibers.
int intersection_number(const Section& p, const Section& q);

// <P,Q> = chi + (P.O) + (Q.O) - (P.Q) - sum contr_v; self-pairing uses the
// 2chi + 2(P.O) - sum form.
Rational height_pairing(const Section& p, const Section& q);

GramMatrix gram(const std::vector<Section>& basis);

// Deterministic depth-first search (canonical embedding order, positive-
// definiteness pruning) for a subset with the target Gram determinant.
// Returns indices into `candidates`; throws when no subset exists.
std::vector<int> find_generator_subset(const std::vector<Section>& candidates,
                                       const Rational& target_det, int size);

// Move two sections into one tower containing both towers' generators.
std::pair<Section, Section> to_common_tower(const Section& p, const Section& q);

}  // namespace mwl

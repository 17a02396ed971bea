#pragma once

#include <vector>

#include "brickforge/coxeter.hpp"
#include "brickforge/geometry.hpp"

namespace brickforge::bruhat {

using coxeter::CoxeterSystem;
using coxeter::GroupElement;
using coxeter::Root;

// Bruhat order via the lifting-property recursion (memoized inside the
// system); agrees with the subword-deletion characterization.
bool bruhat_leq(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y);

// Labels of atoms/coatoms of the Bruhat interval [x, y]:
//   E+(x,y) = { beta in Phi+ : x < s_beta x <= y },
//   E-(x,y) = { beta in Phi+ : x <= s_beta y < y }   (covers below y).
struct BruhatEdgeLabelSet {
  GroupElement base;
  GroupElement top;
  std::vector<Root> atoms_labels;
  std::vector<Root> coatoms_labels;
};
BruhatEdgeLabelSet cover_label_sets(const CoxeterSystem& sys, const GroupElement& x,
                                    const GroupElement& y);

// Cone spanned by a label set.  The labels of a Bruhat interval are already
// the extremal rays; this is asserted, not re-derived.
geometry::RationalCone bruhat_cone(const CoxeterSystem& sys, const std::vector<Root>& labels);

// I(x,y) = { w : Inv(w) and E+(x,y) are disjoint }, a lower order ideal in
// right weak order.
struct WeakIdeal {
  GroupElement x;
  GroupElement y;
  std::vector<GroupElement> members;
};
WeakIdeal weak_ideal(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y);

// Id-level helpers used by the enumeration sweeps.
std::vector<int> eplus_ids(const CoxeterSystem& sys, CoxeterSystem::Id x, CoxeterSystem::Id y);
std::vector<int> eminus_ids(const CoxeterSystem& sys, CoxeterSystem::Id x, CoxeterSystem::Id y);
uint64_t root_index_mask(const std::vector<int>& root_indices);
std::vector<CoxeterSystem::Id> ideal_ids(const CoxeterSystem& sys, CoxeterSystem::Id x,
                                         CoxeterSystem::Id y);

}  // namespace brickforge::bruhat

#include "brickforge/bruhat.hpp"

#include <algorithm>

#include "brickforge/errors.hpp"
#include "brickforge/lp.hpp"

namespace brickforge::bruhat {

using Id = CoxeterSystem::Id;

bool bruhat_leq(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y) {
  return sys.bruhat_leq_ids(sys.id_of(x), sys.id_of(y));
}

std::vector<int> eplus_ids(const CoxeterSystem& sys, Id x, Id y) {
  std::vector<int> out;
  const int np = static_cast<int>(sys.positive_roots().size());
  const int lx = sys.len(x);
  for (int b = 0; b < np; ++b) {
    const Id tx = sys.mul(sys.reflection_id(b), x);
    if (sys.len(tx) == lx + 1 && sys.bruhat_leq_ids(tx, y)) out.push_back(b);
  }
  return out;
}

std::vector<int> eminus_ids(const CoxeterSystem& sys, Id x, Id y) {
  std::vector<int> out;
  const int np = static_cast<int>(sys.positive_roots().size());
  const int ly = sys.len(y);
  for (int b = 0; b < np; ++b) {
    const Id ty = sys.mul(sys.reflection_id(b), y);
    if (sys.len(ty) == ly - 1 && sys.bruhat_leq_ids(x, ty)) out.push_back(b);
  }
  return out;
}

uint64_t root_index_mask(const std::vector<int>& root_indices) {
  uint64_t m = 0;
  for (int b : root_indices) m |= uint64_t{1} << b;
  return m;
}

BruhatEdgeLabelSet cover_label_sets(const CoxeterSystem& sys, const GroupElement& x,
                                    const GroupElement& y) {
  const Id xi = sys.id_of(x);
  const Id yi = sys.id_of(y);
  if (!sys.bruhat_leq_ids(xi, yi)) throw NotComparable("cover_label_sets: x is not below y");
  BruhatEdgeLabelSet out;
  out.base = x;
  out.top = y;
  for (int b : eplus_ids(sys, xi, yi)) out.atoms_labels.push_back(sys.positive_roots()[b]);
  for (int b : eminus_ids(sys, xi, yi)) out.coatoms_labels.push_back(sys.positive_roots()[b]);
  return out;
}

geometry::RationalCone bruhat_cone(const CoxeterSystem& sys, const std::vector<Root>& labels) {
  const int n = sys.rank();
  std::vector<geometry::QVec> gens;
  gens.reserve(labels.size());
  for (const Root& r : labels) {
    check(sys.signed_root_id(r) > 0, "bruhat_cone: labels must be positive roots");
    gens.push_back(num::to_qvec(r));
  }
  // Edge label sets of Bruhat intervals are extremal generating sets; trust
  // but verify.
  for (size_t i = 0; i < gens.size(); ++i) {
    std::vector<geometry::QVec> others;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) others.push_back(gens[j]);
    check(!geometry::in_conic_hull(others, gens[i]),
          "bruhat_cone: label set is not extremal");
  }
  return geometry::make_cone(n, gens);
}

std::vector<Id> ideal_ids(const CoxeterSystem& sys, Id x, Id y) {
  if (!sys.bruhat_leq_ids(x, y)) throw NotComparable("weak_ideal: x is not below y");
  const uint64_t emask = root_index_mask(eplus_ids(sys, x, y));
  std::vector<Id> out;
  for (Id z = 0; z < sys.group_size(); ++z)
    if ((sys.inv_mask(z) & emask) == 0) out.push_back(z);
  return out;
}

WeakIdeal weak_ideal(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y) {
  WeakIdeal out;
  out.x = x;
  out.y = y;
  const std::vector<Id> ids = ideal_ids(sys, sys.id_of(x), sys.id_of(y));
  out.members.reserve(ids.size());
  for (Id z : ids) out.members.push_back(sys.element(z));
  // Sanity: an ideal in right weak order is closed under taking prefixes.
  for (Id z : ids) {
    for (int s = 0; s < sys.rank(); ++s) {
      const Id zs = sys.right(z, s);
      if (sys.len(zs) < sys.len(z))
        check(std::binary_search(ids.begin(), ids.end(), zs),
              "weak_ideal: output is not prefix-closed");
    }
  }
  return out;
}

}  // namespace brickforge::bruhat

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brickforge/coxeter.hpp"

namespace brickforge::subword {

using coxeter::CoxeterSystem;
using coxeter::GroupElement;
using coxeter::Root;
using coxeter::Weight;

// Words are sequences of 1-based generator letters; facets are strictly
// increasing lists of 1-based positions in the word.
using Word = std::vector<int>;
using Facet = std::vector<int>;

Word parse_word(const std::string& text);
std::string format_word(const Word& word);

// Demazure product: fold the word left to right, keeping a letter only when
// it goes up in length.
GroupElement demazure_product(const CoxeterSystem& sys, const Word& word);

// The subword complex SC(Q, w): faces are position sets whose complement
// contains a reduced word for w.  Facets are complements of reduced words.
class Complex {
 public:
  // Keeps a reference to the system; the caller owns it and must keep it
  // alive for the lifetime of the complex.
  Complex(const CoxeterSystem& sys, Word word, const GroupElement& target);

  const CoxeterSystem& system() const { return *sys_; }
  const Word& word() const { return word_; }
  int size() const { return m_; }
  const GroupElement& target() const { return target_; }
  GroupElement demazure() const { return sys_->element(dem_id_); }

  // True when the target is not below the Demazure product of the word, in
  // which case the complex has no faces at all and facet queries throw
  // EmptyComplex.
  bool empty() const { return empty_; }

  bool is_facet(const Facet& f) const;
  const std::vector<Facet>& facets() const;

  // r(I,k) = product of the complement letters of I left of position k,
  // applied to the simple root of the letter at k.
  Root root_function(const Facet& f, int k) const;
  std::vector<Root> root_configuration(const Facet& f) const;
  // Same prefix, applied to the fundamental weight of the letter at k.
  Weight weight_function(const Facet& f, int k) const;

  // Position i of facet f is flippable when |r(f,i)| is an inversion of the
  // target; the flip exchanges i against the unique complement position with
  // the opposite root.
  bool flippable(const Facet& f, int i) const;
  std::pair<Facet, int> flip(const Facet& f, int i) const;

  Facet greedy_facet() const;      // lexicographically first facet
  Facet antigreedy_facet() const;  // lexicographically last facet

  // Roots r(I,i) at non-flippable facet positions; equals the atom label set
  // E+(w, Dem(Q)) of the Bruhat interval.
  std::vector<Root> nonflippable_root_set() const;

  using Id = CoxeterSystem::Id;
  Id target_id() const { return w_id_; }
  Id demazure_id() const { return dem_id_; }
  // Dem(s_k ... s_m) for 1 <= k <= m+1 (identity at m+1).
  Id suffix_demazure(int k) const { return dem_suffix_[k]; }
  int letter0(int k) const { return letters0_[k - 1]; }

  // Mask-level facet access (positions as bits k-1), parallel to facets().
  const std::vector<uint64_t>& facet_masks() const;
  // Signed root ids r(I,k) for every position k of the word, per facet.
  const std::vector<std::vector<int16_t>>& facet_root_ids() const;
  std::optional<int> facet_index(const Facet& f) const;

  const std::vector<int>& eplus_root_indices() const;  // E+(w, Dem(Q))
  uint64_t eplus_mask() const;

 private:
  void require_nonempty() const;
  void ensure_facets() const;
  std::vector<int16_t> root_ids_for_mask(uint64_t mask) const;
  uint64_t construct_extreme(bool prefer_include) const;
  int position_in_facets(uint64_t mask) const;

  const CoxeterSystem* sys_;
  Word word_;
  std::vector<uint8_t> letters0_;
  int m_ = 0;
  GroupElement target_;
  Id w_id_ = 0;
  Id dem_id_ = 0;
  std::vector<Id> dem_suffix_;
  bool empty_ = false;

  mutable bool facets_done_ = false;
  mutable std::vector<Facet> facets_;
  mutable std::vector<uint64_t> facet_masks_;
  mutable std::vector<std::vector<int16_t>> facet_root_ids_;
  mutable std::optional<std::vector<int>> eplus_;
};

// Lifts a facet J of SC(Q, w') to the unique facet of SC(Q, w) containing it,
// where w' covers w in Bruhat order.  Throws NoCover when the cover
// relation fails.
Facet iota_map(const Complex& upper, const Facet& facet_of_upper, const GroupElement& lower_target);

}  // namespace brickforge::subword

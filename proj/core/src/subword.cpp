#include "brickforge/subword.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "brickforge/bruhat.hpp"
#include "brickforge/errors.hpp"

namespace brickforge::subword {

using Id = CoxeterSystem::Id;
using coxeter::SignedRoot;
using num::IntMat;
using num::IntVec;
using num::Rational;

namespace {

constexpr uint64_t bit(int pos1) { return uint64_t{1} << (pos1 - 1); }

// Lexicographic order on the position lists, expressed on masks.  For two
// distinct sets the smaller one is the one containing the least element of
// the symmetric difference.
bool mask_lex_less(uint64_t a, uint64_t b) {
  if (a == b) return false;
  const uint64_t d = a ^ b;
  const uint64_t low = d & (~d + 1);
  return (a & low) != 0;
}

Facet facet_from_mask(uint64_t mask, int m) {
  Facet f;
  for (int k = 1; k <= m; ++k)
    if (mask & bit(k)) f.push_back(k);
  return f;
}

}  // namespace

Word parse_word(const std::string& text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch < '1' || ch > '9') throw UsageError("words are strings of digits 1..9");
    w.push_back(ch - '0');
  }
  return w;
}

std::string format_word(const Word& word) {
  std::string s;
  s.reserve(word.size());
  for (int l : word) {
    if (l < 1 || l > 9) throw UsageError("letters outside 1..9 have no digit form");
    s.push_back(static_cast<char>('0' + l));
  }
  return s;
}

GroupElement demazure_product(const CoxeterSystem& sys, const Word& word) {
  Id v = sys.id_identity();
  for (int l : word) {
    if (l < 1 || l > sys.rank()) throw IndexOutOfRange("word letter outside generator range");
    const int s = l - 1;
    if (sys.col_root(v, s) > 0) v = sys.right(v, s);
  }
  return sys.element(v);
}

Complex::Complex(const CoxeterSystem& sys, Word word, const GroupElement& target)
    : sys_(&sys), word_(std::move(word)), target_(target) {
  m_ = static_cast<int>(word_.size());
  if (m_ > 64) throw DimensionTooLarge("word length exceeds the 64-position engine limit");
  letters0_.reserve(word_.size());
  for (int l : word_) {
    if (l < 1 || l > sys.rank()) throw IndexOutOfRange("word letter outside generator range");
    letters0_.push_back(static_cast<uint8_t>(l - 1));
  }
  w_id_ = sys.id_of(target_);
  // dem_suffix_[k] = Dem(s_k ... s_m), built right to left by the star
  // product v -> max(v, s v).
  dem_suffix_.assign(static_cast<size_t>(m_) + 2, sys.id_identity());
  for (int k = m_; k >= 1; --k) {
    const Id v = dem_suffix_[static_cast<size_t>(k) + 1];
    const Id lv = sys.left(letters0_[static_cast<size_t>(k) - 1], v);
    dem_suffix_[static_cast<size_t>(k)] = sys.len(lv) > sys.len(v) ? lv : v;
  }
  dem_id_ = dem_suffix_[1];
  empty_ = !sys.bruhat_leq_ids(w_id_, dem_id_);
}

void Complex::require_nonempty() const {
  if (empty_) throw EmptyComplex("target is not below the Demazure product of the word");
}

bool Complex::is_facet(const Facet& f) const {
  require_nonempty();
  uint64_t mask = 0;
  int prev = 0;
  for (int p : f) {
    if (p < 1 || p > m_) throw IndexOutOfRange("facet position outside the word");
    if (p <= prev) throw IndexOutOfRange("facet positions must be strictly increasing");
    prev = p;
    mask |= bit(p);
  }
  if (static_cast<int>(f.size()) != m_ - sys_->len(w_id_)) return false;
  Id v = sys_->id_identity();
  for (int k = 1; k <= m_; ++k) {
    if (mask & bit(k)) continue;
    const int s = letters0_[static_cast<size_t>(k) - 1];
    if (sys_->col_root(v, s) < 0) return false;
    v = sys_->right(v, s);
  }
  return v == w_id_;
}

std::vector<int16_t> Complex::root_ids_for_mask(uint64_t mask) const {
  std::vector<int16_t> rid(static_cast<size_t>(m_));
  Id v = sys_->id_identity();
  for (int k = 1; k <= m_; ++k) {
    const int s = letters0_[static_cast<size_t>(k) - 1];
    rid[static_cast<size_t>(k) - 1] = sys_->col_root(v, s);
    if (!(mask & bit(k))) v = sys_->right(v, s);
  }
  check(v == w_id_, "root function walk must end at the target");
  return rid;
}

uint64_t Complex::construct_extreme(bool prefer_include) const {
  require_nonempty();
  uint64_t mask = 0;
  Id v = sys_->id_identity();
  Id u = w_id_;  // v^{-1} w, the part of the target still to be produced
  for (int k = 1; k <= m_; ++k) {
    const int s = letters0_[static_cast<size_t>(k) - 1];
    const Id su = sys_->left(s, u);
    const bool include_ok = sys_->bruhat_leq_ids(u, dem_suffix_[static_cast<size_t>(k) + 1]);
    const bool exclude_ok = sys_->len(su) < sys_->len(u) &&
                            sys_->bruhat_leq_ids(su, dem_suffix_[static_cast<size_t>(k) + 1]);
    const bool take_letter = prefer_include ? !include_ok : exclude_ok;
    if (take_letter) {
      check(exclude_ok, "facet scan consumes a letter only when legal");
      v = sys_->right(v, s);
      u = su;
    } else {
      check(include_ok, "facet scan keeps a position only when legal");
      mask |= bit(k);
    }
  }
  check(u == sys_->id_identity() && v == w_id_, "facet scan must exhaust the target");
  return mask;
}

void Complex::ensure_facets() const {
  if (facets_done_) return;
  require_nonempty();
  const uint64_t wmask = sys_->inv_mask(w_id_);
  std::vector<uint64_t> masks;
  std::vector<std::vector<int16_t>> roots;
  std::map<uint64_t, int> seen;
  const uint64_t g = construct_extreme(true);
  masks.push_back(g);
  roots.push_back(root_ids_for_mask(g));
  seen.emplace(g, 0);
  // Flip walk; the flip graph of a subword complex is connected.
  for (size_t qi = 0; qi < masks.size(); ++qi) {
    const uint64_t cur = masks[qi];
    const std::vector<int16_t> rid = roots[qi];
    for (int i = 1; i <= m_; ++i) {
      if (!(cur & bit(i))) continue;
      const int16_t r = rid[static_cast<size_t>(i) - 1];
      const int ridx = (r > 0 ? r : -r) - 1;
      if (!(wmask & (uint64_t{1} << ridx))) continue;
      int j = 0;
      for (int k = 1; k <= m_; ++k) {
        if (cur & bit(k)) continue;
        if (rid[static_cast<size_t>(k) - 1] == static_cast<int16_t>(ridx + 1)) {
          j = k;
          break;
        }
      }
      check(j != 0, "flip partner exists for every inversion root");
      const uint64_t nxt = (cur & ~bit(i)) | bit(j);
      if (seen.count(nxt)) continue;
      std::vector<int16_t> nrid = rid;
      const Id t = sys_->reflection_id(ridx);
      const int lo = std::min(i, j);
      const int hi = std::max(i, j);
      for (int k = lo + 1; k <= hi; ++k)
        nrid[static_cast<size_t>(k) - 1] = sys_->act_root(t, nrid[static_cast<size_t>(k) - 1]);
      seen.emplace(nxt, static_cast<int>(masks.size()));
      masks.push_back(nxt);
      roots.push_back(std::move(nrid));
    }
  }
  std::vector<size_t> order(masks.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return mask_lex_less(masks[a], masks[b]); });
  facet_masks_.clear();
  facet_root_ids_.clear();
  facets_.clear();
  for (size_t idx : order) {
    facet_masks_.push_back(masks[idx]);
    facet_root_ids_.push_back(std::move(roots[idx]));
    facets_.push_back(facet_from_mask(masks[idx], m_));
  }
  facets_done_ = true;
}

const std::vector<Facet>& Complex::facets() const {
  ensure_facets();
  return facets_;
}

const std::vector<uint64_t>& Complex::facet_masks() const {
  ensure_facets();
  return facet_masks_;
}

const std::vector<std::vector<int16_t>>& Complex::facet_root_ids() const {
  ensure_facets();
  return facet_root_ids_;
}

int Complex::position_in_facets(uint64_t mask) const {
  ensure_facets();
  auto it = std::lower_bound(facet_masks_.begin(), facet_masks_.end(), mask, mask_lex_less);
  if (it == facet_masks_.end() || *it != mask) return -1;
  return static_cast<int>(it - facet_masks_.begin());
}

std::optional<int> Complex::facet_index(const Facet& f) const {
  if (!is_facet(f)) return std::nullopt;
  uint64_t mask = 0;
  for (int p : f) mask |= bit(p);
  const int at = position_in_facets(mask);
  check(at >= 0, "every facet appears in the flip walk");
  return at;
}

Root Complex::root_function(const Facet& f, int k) const {
  if (!is_facet(f)) throw PreconditionFailed("root function is defined on facets");
  if (k < 1 || k > m_) throw IndexOutOfRange("word position outside 1..m");
  uint64_t mask = 0;
  for (int p : f) mask |= bit(p);
  Id v = sys_->id_identity();
  for (int t = 1; t < k; ++t)
    if (!(mask & bit(t))) v = sys_->right(v, letters0_[static_cast<size_t>(t) - 1]);
  return sys_->root_of(sys_->col_root(v, letters0_[static_cast<size_t>(k) - 1]));
}

std::vector<Root> Complex::root_configuration(const Facet& f) const {
  if (!is_facet(f)) throw PreconditionFailed("root configuration is defined on facets");
  uint64_t mask = 0;
  for (int p : f) mask |= bit(p);
  const std::vector<int16_t> rid = root_ids_for_mask(mask);
  std::vector<Root> out;
  out.reserve(f.size());
  for (int p : f) out.push_back(sys_->root_of(rid[static_cast<size_t>(p) - 1]));
  return out;
}

Weight Complex::weight_function(const Facet& f, int k) const {
  if (!is_facet(f)) throw PreconditionFailed("weight function is defined on facets");
  if (k < 1 || k > m_) throw IndexOutOfRange("word position outside 1..m");
  uint64_t mask = 0;
  for (int p : f) mask |= bit(p);
  Id v = sys_->id_identity();
  for (int t = 1; t < k; ++t)
    if (!(mask & bit(t))) v = sys_->right(v, letters0_[static_cast<size_t>(t) - 1]);
  const IntMat mat = sys_->element(v).matrix;
  const IntVec sw = mat.act(sys_->weights_scaled()[letters0_[static_cast<size_t>(k) - 1]]);
  Weight out(static_cast<size_t>(sys_->rank()));
  for (int i = 0; i < sys_->rank(); ++i)
    out[static_cast<size_t>(i)] = Rational(sw[i]) / sys_->weight_denominator();
  return out;
}

bool Complex::flippable(const Facet& f, int i) const {
  if (!is_facet(f)) throw PreconditionFailed("flips are defined on facets");
  if (std::find(f.begin(), f.end(), i) == f.end())
    throw NotInFacet("position is not in the facet");
  uint64_t mask = 0;
  for (int p : f) mask |= bit(p);
  const std::vector<int16_t> rid = root_ids_for_mask(mask);
  const int16_t r = rid[static_cast<size_t>(i) - 1];
  const int ridx = (r > 0 ? r : -r) - 1;
  return (sys_->inv_mask(w_id_) & (uint64_t{1} << ridx)) != 0;
}

std::pair<Facet, int> Complex::flip(const Facet& f, int i) const {
  if (!flippable(f, i)) throw NotFlippable("|r(I,i)| is not an inversion of the target");
  uint64_t mask = 0;
  for (int p : f) mask |= bit(p);
  const std::vector<int16_t> rid = root_ids_for_mask(mask);
  const int16_t r = rid[static_cast<size_t>(i) - 1];
  const int ridx = (r > 0 ? r : -r) - 1;
  int j = 0;
  for (int k = 1; k <= m_; ++k) {
    if (mask & bit(k)) continue;
    if (rid[static_cast<size_t>(k) - 1] == static_cast<int16_t>(ridx + 1)) {
      j = k;
      break;
    }
  }
  check(j != 0, "flip partner exists for every inversion root");
  const uint64_t nxt = (mask & ~bit(i)) | bit(j);
  return {facet_from_mask(nxt, m_), j};
}

Facet Complex::greedy_facet() const {
  const uint64_t mask = construct_extreme(true);
  const std::vector<int16_t> rid = root_ids_for_mask(mask);
  for (int k = 1; k <= m_; ++k)
    if (mask & bit(k))
      check(rid[static_cast<size_t>(k) - 1] > 0, "greedy facet carries positive roots");
  return facet_from_mask(mask, m_);
}

Facet Complex::antigreedy_facet() const {
  const uint64_t mask = construct_extreme(false);
  const std::vector<int16_t> rid = root_ids_for_mask(mask);
  const Id winv = sys_->inv(w_id_);
  for (int k = 1; k <= m_; ++k)
    if (mask & bit(k))
      check(sys_->act_root(winv, rid[static_cast<size_t>(k) - 1]) > 0,
            "antigreedy facet roots lie in w(Phi+)");
  return facet_from_mask(mask, m_);
}

std::vector<Root> Complex::nonflippable_root_set() const {
  ensure_facets();
  const uint64_t wmask = sys_->inv_mask(w_id_);
  std::vector<int16_t> collected;
  for (size_t fi = 0; fi < facet_masks_.size(); ++fi) {
    const uint64_t mask = facet_masks_[fi];
    const std::vector<int16_t>& rid = facet_root_ids_[fi];
    for (int k = 1; k <= m_; ++k) {
      if (!(mask & bit(k))) continue;
      const int16_t r = rid[static_cast<size_t>(k) - 1];
      const int ridx = (r > 0 ? r : -r) - 1;
      if (!(wmask & (uint64_t{1} << ridx))) collected.push_back(r);
    }
  }
  std::sort(collected.begin(), collected.end());
  collected.erase(std::unique(collected.begin(), collected.end()), collected.end());
  std::vector<int16_t> expected;
  for (int b : eplus_root_indices()) expected.push_back(static_cast<int16_t>(b + 1));
  std::sort(expected.begin(), expected.end());
  check(collected == expected, "non-flippable roots form the atom label set E+(w, Dem(Q))");
  std::vector<Root> out;
  out.reserve(collected.size());
  for (int16_t r : collected) out.push_back(sys_->root_of(r));
  return out;
}

const std::vector<int>& Complex::eplus_root_indices() const {
  if (!eplus_) {
    require_nonempty();
    eplus_ = bruhat::eplus_ids(*sys_, w_id_, dem_id_);
  }
  return *eplus_;
}

uint64_t Complex::eplus_mask() const { return bruhat::root_index_mask(eplus_root_indices()); }

Facet iota_map(const Complex& upper, const Facet& facet_of_upper,
               const GroupElement& lower_target) {
  const CoxeterSystem& sys = upper.system();
  const Id wp = upper.target_id();
  const Id w = sys.id_of(lower_target);
  if (sys.len(wp) != sys.len(w) + 1 || !sys.bruhat_leq_ids(w, wp))
    throw NoCover("iota requires the upper target to cover the lower target");
  if (!upper.is_facet(facet_of_upper))
    throw PreconditionFailed("iota is defined on facets of the upper complex");
  const int m = upper.size();
  uint64_t jmask = 0;
  for (int p : facet_of_upper) jmask |= bit(p);
  int found = 0;
  uint64_t out = 0;
  for (int k = 1; k <= m; ++k) {
    if (jmask & bit(k)) continue;
    Id v = sys.id_identity();
    bool ok = true;
    for (int t = 1; t <= m; ++t) {
      if ((jmask & bit(t)) || t == k) continue;
      const int s = upper.letter0(t);
      if (sys.col_root(v, s) < 0) {
        ok = false;
        break;
      }
      v = sys.right(v, s);
    }
    if (ok && v == w) {
      ++found;
      out = jmask | bit(k);
    }
  }
  check(found == 1, "exactly one extension of the facet lands in the lower complex");
  return facet_from_mask(out, m);
}

}  // namespace brickforge::subword

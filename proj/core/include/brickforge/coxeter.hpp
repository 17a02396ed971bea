#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "brickforge/cartan.hpp"
#include "brickforge/numeric.hpp"

namespace brickforge::coxeter {

using num::IntMat;
using num::IntVec;
using num::QVec;

// Roots live in the simple-root basis with integer coordinates.
using Root = IntVec;
using Weight = QVec;

// Signed index into the positive-root list: +(i+1) is positive root i,
// -(i+1) its negative.  0 is never used.
using SignedRoot = int16_t;

struct GroupElement {
  IntMat matrix;   // column s holds w(alpha_s) in the simple-root basis
  int length = 0;  // |Inv(w)|
  bool operator==(const GroupElement& o) const { return matrix == o.matrix; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
};

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const { return num::IntMatHash{}(g.matrix); }
};

// A finite crystallographic Coxeter system.  Root data is computed on
// construction; the full group enumeration (element table, Cayley tables,
// Bruhat order) is built lazily on first use and shared read-only afterwards.
class CoxeterSystem {
 public:
  using Id = uint32_t;

  explicit CoxeterSystem(CartanMatrix cartan);
  ~CoxeterSystem();  // out of line: Registry is incomplete here
  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  int rank() const { return cartan_.rank; }
  const CartanMatrix& cartan() const { return cartan_; }
  const IntMat& simple_reflection(int s) const;  // 0-based s

  const std::vector<Root>& positive_roots() const { return pos_roots_; }
  int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
  // Index of a positive root, -1 if the vector is not one.
  int root_index(const Root& r) const;
  // Signed id of an arbitrary root vector; throws NotARoot otherwise.
  SignedRoot signed_root_id(const Root& r) const;
  Root root_of(SignedRoot id) const;
  int alpha_index(int s) const { return alpha_idx_[static_cast<size_t>(s)]; }

  const std::vector<Weight>& fundamental_weights() const { return weights_; }
  // weights_scaled()[s] = weight_denominator() * weight_s, integral.
  const std::vector<IntVec>& weights_scaled() const { return weights_scaled_; }
  long long weight_denominator() const { return weight_den_; }

  const std::vector<long long>& symmetrizer() const { return symmetrizer_; }
  // Symmetrized bilinear form on the root basis: gram(s,t) = d_s a[s][t].
  long long gram(int s, int t) const;
  // <u, v> under the symmetrized form, exact in 128-bit-safe integer range.
  long long form(const IntVec& u, const IntVec& v) const;

  GroupElement identity_element() const;
  GroupElement longest_element() const;

  // --- lazily built group registry -----------------------------------------
  size_t group_size() const;
  Id id_identity() const { return 0; }
  Id id_longest() const;
  Id id_of(const GroupElement& g) const;
  Id id_of_matrix(const IntMat& m) const;
  GroupElement element(Id e) const;
  Id right(Id e, int s) const;     // e * simple(s)
  Id left(int s, Id e) const;      // simple(s) * e
  Id inv(Id e) const;
  Id mul(Id a, Id b) const;
  int len(Id e) const;
  uint64_t inv_mask(Id e) const;   // bit i <=> positive root i lies in Inv(w)
  SignedRoot col_root(Id e, int s) const;          // w(alpha_s)
  SignedRoot act_root(Id e, SignedRoot r) const;   // w(root)
  Id reflection_id(int root_idx) const;            // s_beta for positive root idx
  bool bruhat_leq_ids(Id x, Id y) const;
  std::vector<int> lexmin_word(Id e) const;        // 1-based letters

 private:
  struct Registry;
  void ensure_registry() const;
  const Registry& reg() const;

  CartanMatrix cartan_;
  std::vector<IntMat> simple_;
  std::vector<Root> pos_roots_;
  std::unordered_map<IntVec, int, num::IntVecHash> root_idx_;
  std::vector<int> alpha_idx_;
  std::vector<Weight> weights_;
  std::vector<IntVec> weights_scaled_;
  long long weight_den_ = 1;
  std::vector<long long> symmetrizer_;
  std::vector<std::vector<long long>> gram_;

  mutable std::unique_ptr<Registry> reg_;
  mutable std::once_flag reg_once_;
};

// Operations mirroring the library surface.  Functions that do not need the
// group enumeration work directly on matrices and stay cheap for large ranks.
CoxeterSystem build_system(const CartanMatrix& cartan);
std::unique_ptr<CoxeterSystem> build_system_ptr(const CartanMatrix& cartan);

Root act(const CoxeterSystem& sys, const GroupElement& w, const Root& v);
Weight act(const CoxeterSystem& sys, const GroupElement& w, const Weight& v);

GroupElement reflection_of_root(const CoxeterSystem& sys, const Root& beta);

int length(const CoxeterSystem& sys, const GroupElement& w);
std::vector<Root> inversion_set(const CoxeterSystem& sys, const GroupElement& w);
uint64_t inversion_mask(const CoxeterSystem& sys, const GroupElement& w);

GroupElement element_from_word(const CoxeterSystem& sys, const std::vector<int>& word);
bool is_reduced(const CoxeterSystem& sys, const std::vector<int>& word);

bool weak_leq(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y);

GroupElement multiply(const CoxeterSystem& sys, const GroupElement& a, const GroupElement& b);
GroupElement inverse_element(const CoxeterSystem& sys, const GroupElement& w);

// Canonical serialization: the lexicographically smallest reduced word,
// rendered as a digit string; identity prints as "e".
std::vector<int> canonical_word(const CoxeterSystem& sys, const GroupElement& w);
std::string format_element(const CoxeterSystem& sys, const GroupElement& w);
// Accepts "e", "w0", or a digit string (product of the listed generators,
// not necessarily reduced).
GroupElement parse_element(const CoxeterSystem& sys, const std::string& text);

}  // namespace brickforge::coxeter

#include "brickforge/coxeter.hpp"

#include <algorithm>

namespace brickforge::coxeter {

using num::Rational;

namespace {

constexpr size_t kRootCap = 10000;     // fail fast on non-finite input
constexpr size_t kGroupCap = 2000000;  // element enumeration budget
constexpr size_t kBruhatTableMax = 4096;

// Exact inverse of an integer matrix that is invertible over Z.
num::IntMat integer_inverse(const num::IntMat& m) {
  int n = m.dim();
  std::vector<std::vector<Rational>> a(static_cast<size_t>(n), std::vector<Rational>(2 * static_cast<size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = m(i, j);
    a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[static_cast<size_t>(piv)][static_cast<size_t>(col)] == 0) ++piv;
    check(piv < n, "group element matrix is invertible");
    std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
    Rational p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int j = 0; j < 2 * n; ++j) a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < 2 * n; ++j)
        a[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  num::IntMat inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational& v = a[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
      check(boost::multiprecision::denominator(v) == 1, "inverse matrix is integral");
      inv(i, j) = static_cast<int32_t>(boost::multiprecision::numerator(v).convert_to<long long>());
    }
  return inv;
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction: roots, weights, symmetrizer.
// ---------------------------------------------------------------------------

CoxeterSystem::CoxeterSystem(CartanMatrix cartan) : cartan_(std::move(cartan)) {
  validate_cartan(cartan_);
  int n = cartan_.rank;

  simple_.reserve(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    num::IntMat m = num::IntMat::identity(n);
    for (int t = 0; t < n; ++t) m(s, t) -= cartan_.a[static_cast<size_t>(s)][static_cast<size_t>(t)];
    simple_.push_back(m);
  }

  // Positive roots: orbit closure of the simple roots, keeping the positive
  // representatives.  A simple reflection maps a positive root to a negative
  // one only when the root is the corresponding simple root, so restricting
  // the breadth-first search to positive vectors still reaches all of Phi+.
  std::unordered_map<IntVec, int, num::IntVecHash> seen;
  std::vector<IntVec> queue;
  for (int s = 0; s < n; ++s) {
    IntVec e(n);
    e[s] = 1;
    seen.emplace(e, 0);
    queue.push_back(e);
  }
  for (size_t q = 0; q < queue.size(); ++q) {
    IntVec v = queue[q];
    for (int s = 0; s < n; ++s) {
      IntVec u = simple_[static_cast<size_t>(s)].act(v);
      if (!u.all_nonneg()) continue;
      if (seen.emplace(u, 0).second) {
        queue.push_back(u);
        if (queue.size() > kRootCap) throw NotFinite("root enumeration exceeded the configured bound");
      }
    }
  }
  pos_roots_ = std::move(queue);
  std::sort(pos_roots_.begin(), pos_roots_.end(), [](const IntVec& a, const IntVec& b) {
    long long ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a < b;
  });
  if (pos_roots_.size() > 64)
    throw NotFinite("positive root count exceeds the 64-root engine budget");
  for (size_t i = 0; i < pos_roots_.size(); ++i) root_idx_[pos_roots_[i]] = static_cast<int>(i);
  alpha_idx_.resize(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    IntVec e(n);
    e[s] = 1;
    alpha_idx_[static_cast<size_t>(s)] = root_idx_.at(e);
  }

  // Fundamental weights in the root basis: alpha_s = sum_t a[t][s] omega_t
  // forces the weight matrix to be the inverse Cartan matrix (omega_s is its
  // column s).
  {
    std::vector<std::vector<Rational>> a(static_cast<size_t>(n), std::vector<Rational>(2 * static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = cartan_.a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      a[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && a[static_cast<size_t>(piv)][static_cast<size_t>(col)] == 0) ++piv;
      check(piv < n, "Cartan matrix is invertible");
      std::swap(a[static_cast<size_t>(col)], a[static_cast<size_t>(piv)]);
      Rational p = a[static_cast<size_t>(col)][static_cast<size_t>(col)];
      for (int j = 0; j < 2 * n; ++j) a[static_cast<size_t>(col)][static_cast<size_t>(j)] /= p;
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        Rational f = a[static_cast<size_t>(r)][static_cast<size_t>(col)];
        if (f == 0) continue;
        for (int j = 0; j < 2 * n; ++j)
          a[static_cast<size_t>(r)][static_cast<size_t>(j)] -= f * a[static_cast<size_t>(col)][static_cast<size_t>(j)];
      }
    }
    weights_.assign(static_cast<size_t>(n), Weight(static_cast<size_t>(n)));
    num::Integer den = 1;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        weights_[static_cast<size_t>(s)][static_cast<size_t>(t)] = a[static_cast<size_t>(t)][static_cast<size_t>(n + s)];
        den = lcm(den, boost::multiprecision::denominator(weights_[static_cast<size_t>(s)][static_cast<size_t>(t)]));
      }
    weight_den_ = den.convert_to<long long>();
    weights_scaled_.assign(static_cast<size_t>(n), IntVec(n));
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        Rational scaled = weights_[static_cast<size_t>(s)][static_cast<size_t>(t)] * weight_den_;
        check(boost::multiprecision::denominator(scaled) == 1, "scaled weights are integral");
        weights_scaled_[static_cast<size_t>(s)][t] =
            static_cast<int32_t>(boost::multiprecision::numerator(scaled).convert_to<long long>());
      }
  }

  symmetrizer_ = minimal_symmetrizer(cartan_);
  gram_.assign(static_cast<size_t>(n), std::vector<long long>(static_cast<size_t>(n), 0));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      gram_[static_cast<size_t>(s)][static_cast<size_t>(t)] =
          symmetrizer_[static_cast<size_t>(s)] * cartan_.a[static_cast<size_t>(s)][static_cast<size_t>(t)];
}

const num::IntMat& CoxeterSystem::simple_reflection(int s) const {
  if (s < 0 || s >= rank()) throw IndexOutOfRange("generator index out of range");
  return simple_[static_cast<size_t>(s)];
}

int CoxeterSystem::root_index(const Root& r) const {
  auto it = root_idx_.find(r);
  return it == root_idx_.end() ? -1 : it->second;
}

SignedRoot CoxeterSystem::signed_root_id(const Root& r) const {
  if (r.all_nonneg()) {
    int i = root_index(r);
    if (i >= 0) return static_cast<SignedRoot>(i + 1);
  } else if (r.all_nonpos()) {
    int i = root_index(-r);
    if (i >= 0) return static_cast<SignedRoot>(-(i + 1));
  }
  throw NotARoot("vector is not a root of this system");
}

Root CoxeterSystem::root_of(SignedRoot id) const {
  check(id != 0, "signed root id is non-zero");
  int i = (id > 0 ? id : -id) - 1;
  const Root& r = pos_roots_[static_cast<size_t>(i)];
  return id > 0 ? r : -r;
}

long long CoxeterSystem::gram(int s, int t) const {
  return gram_[static_cast<size_t>(s)][static_cast<size_t>(t)];
}

long long CoxeterSystem::form(const IntVec& u, const IntVec& v) const {
  long long acc = 0;
  for (int s = 0; s < rank(); ++s) {
    if (u[s] == 0) continue;
    long long row = 0;
    for (int t = 0; t < rank(); ++t) row += gram_[static_cast<size_t>(s)][static_cast<size_t>(t)] * v[t];
    acc += u[s] * row;
  }
  return acc;
}

GroupElement CoxeterSystem::identity_element() const {
  return {num::IntMat::identity(rank()), 0};
}

GroupElement CoxeterSystem::longest_element() const {
  // Ascend in right weak order until every simple step descends.
  num::IntMat m = num::IntMat::identity(rank());
  int steps = 0;
  for (;;) {
    int s = -1;
    for (int t = 0; t < rank(); ++t) {
      if (m.column(t).all_nonneg()) {
        s = t;
        break;
      }
    }
    if (s < 0) break;
    m = m.mul(simple_[static_cast<size_t>(s)]);
    ++steps;
    check(steps <= num_positive_roots(), "longest-element climb terminates");
  }
  return {m, num_positive_roots()};
}

// ---------------------------------------------------------------------------
// Group registry.
// ---------------------------------------------------------------------------

struct CoxeterSystem::Registry {
  std::vector<num::IntMat> elems;
  std::unordered_map<num::IntMat, Id, num::IntMatHash> ids;
  std::vector<std::pair<Id, uint8_t>> parent;  // (shorter element, letter)
  std::vector<int16_t> lens;
  std::vector<uint64_t> masks;
  std::vector<Id> right_tab;   // e * n + s
  std::vector<Id> left_tab;    // e * n + s
  std::vector<Id> inv_tab;
  std::vector<SignedRoot> colroot;  // e * n + s : w(alpha_s)
  std::vector<SignedRoot> actpos;   // e * npos + i : w(rho_i)
  std::vector<Id> refl;             // per positive root index
  Id longest = 0;
  bool table_mode = false;
  size_t row_words = 0;
  std::vector<uint64_t> bruhat_rows;  // row per y, bit per x
  mutable std::unordered_map<uint64_t, char> bruhat_memo;
  mutable std::mutex memo_mutex;
};

CoxeterSystem::~CoxeterSystem() = default;

void CoxeterSystem::ensure_registry() const {
  std::call_once(reg_once_, [this] {
    auto r = std::make_unique<Registry>();
    int n = rank();
    int npos = num_positive_roots();

    r->elems.push_back(num::IntMat::identity(n));
    r->ids.emplace(r->elems[0], 0);
    r->parent.emplace_back(0, 0);
    r->lens.push_back(0);
    r->masks.push_back(0);

    for (size_t cur = 0; cur < r->elems.size(); ++cur) {
      num::IntMat m = r->elems[cur];
      for (int s = 0; s < n; ++s) {
        IntVec col = m.column(s);
        bool ascent = col.all_nonneg();
        int ci = root_index(ascent ? col : -col);
        check(ci >= 0, "group element columns are roots");
        r->colroot.push_back(static_cast<SignedRoot>(ascent ? ci + 1 : -(ci + 1)));
        num::IntMat prod = m.mul(simple_[static_cast<size_t>(s)]);
        auto [it, inserted] = r->ids.emplace(prod, static_cast<Id>(r->elems.size()));
        if (inserted) {
          check(ascent, "first discovery of an element is an ascent");
          r->elems.push_back(prod);
          r->parent.emplace_back(static_cast<Id>(cur), static_cast<uint8_t>(s));
          r->lens.push_back(static_cast<int16_t>(r->lens[cur] + 1));
          r->masks.push_back(r->masks[cur] | (uint64_t{1} << ci));
          if (r->elems.size() > kGroupCap) throw NotFinite("group enumeration exceeded the element budget");
        }
        r->right_tab.push_back(it->second);
      }
    }

    size_t W = r->elems.size();
    r->left_tab.assign(W * static_cast<size_t>(n), 0);
    r->inv_tab.assign(W, 0);
    for (int s = 0; s < n; ++s)
      r->left_tab[static_cast<size_t>(s)] = r->right_tab[static_cast<size_t>(s)];  // s * e = e * s
    for (size_t e = 1; e < W; ++e) {
      auto [p, t] = r->parent[e];
      for (int s = 0; s < n; ++s) {
        Id sp = r->left_tab[static_cast<size_t>(p) * static_cast<size_t>(n) + static_cast<size_t>(s)];
        r->left_tab[e * static_cast<size_t>(n) + static_cast<size_t>(s)] =
            r->right_tab[static_cast<size_t>(sp) * static_cast<size_t>(n) + t];
      }
      r->inv_tab[e] = r->left_tab[static_cast<size_t>(r->inv_tab[r->parent[e].first]) * static_cast<size_t>(n) + t];
    }

    r->actpos.assign(W * static_cast<size_t>(npos), 0);
    for (size_t e = 0; e < W; ++e)
      for (int i = 0; i < npos; ++i) {
        IntVec v = r->elems[e].act(pos_roots_[static_cast<size_t>(i)]);
        bool posv = v.all_nonneg();
        int vi = root_index(posv ? v : -v);
        check(vi >= 0, "group action permutes roots");
        r->actpos[e * static_cast<size_t>(npos) + static_cast<size_t>(i)] =
            static_cast<SignedRoot>(posv ? vi + 1 : -(vi + 1));
      }

    r->refl.assign(static_cast<size_t>(npos), 0);
    for (int i = 0; i < npos; ++i) {
      const Root& beta = pos_roots_[static_cast<size_t>(i)];
      long long bb = form(beta, beta);
      num::IntMat m(n);
      for (int t = 0; t < n; ++t) {
        IntVec e(n);
        e[t] = 1;
        long long numv = 2 * form(beta, e);
        check(numv % bb == 0, "crystallographic reflection coefficients are integral");
        long long coef = numv / bb;
        for (int row = 0; row < n; ++row)
          m(row, t) = static_cast<int32_t>((row == t ? 1 : 0) - coef * beta[row]);
      }
      auto it = r->ids.find(m);
      check(it != r->ids.end(), "reflections belong to the group");
      r->refl[static_cast<size_t>(i)] = it->second;
    }

    uint64_t full = npos == 64 ? ~uint64_t{0} : ((uint64_t{1} << npos) - 1);
    bool found_longest = false;
    for (size_t e = 0; e < W; ++e) {
      if (r->masks[e] == full) {
        r->longest = static_cast<Id>(e);
        found_longest = true;
        break;
      }
    }
    check(found_longest, "longest element exists");

    if (W <= kBruhatTableMax) {
      r->table_mode = true;
      r->row_words = (W + 63) / 64;
      r->bruhat_rows.assign(W * r->row_words, 0);
      r->bruhat_rows[0] |= 1;  // e <= e
      for (size_t y = 1; y < W; ++y) {
        int s = -1;
        for (int t = 0; t < n; ++t) {
          if (r->masks[y] >> alpha_idx_[static_cast<size_t>(t)] & 1) {
            s = t;
            break;
          }
        }
        check(s >= 0, "non-identity element has a left descent");
        Id sy = r->left_tab[y * static_cast<size_t>(n) + static_cast<size_t>(s)];
        const uint64_t* src = &r->bruhat_rows[static_cast<size_t>(sy) * r->row_words];
        uint64_t* dst = &r->bruhat_rows[y * r->row_words];
        for (size_t x = 0; x < W; ++x) {
          Id sx = r->left_tab[x * static_cast<size_t>(n) + static_cast<size_t>(s)];
          size_t lookup = r->lens[sx] < r->lens[x] ? sx : x;
          if (src[lookup / 64] >> (lookup % 64) & 1) dst[x / 64] |= uint64_t{1} << (x % 64);
        }
      }
    }

    reg_ = std::move(r);
  });
}

const CoxeterSystem::Registry& CoxeterSystem::reg() const {
  ensure_registry();
  return *reg_;
}

size_t CoxeterSystem::group_size() const { return reg().elems.size(); }
CoxeterSystem::Id CoxeterSystem::id_longest() const { return reg().longest; }

CoxeterSystem::Id CoxeterSystem::id_of_matrix(const num::IntMat& m) const {
  const Registry& r = reg();
  auto it = r.ids.find(m);
  if (it == r.ids.end()) throw Error("matrix is not an element of this system");
  return it->second;
}

CoxeterSystem::Id CoxeterSystem::id_of(const GroupElement& g) const { return id_of_matrix(g.matrix); }

GroupElement CoxeterSystem::element(Id e) const {
  const Registry& r = reg();
  return {r.elems[e], r.lens[e]};
}

CoxeterSystem::Id CoxeterSystem::right(Id e, int s) const {
  return reg().right_tab[static_cast<size_t>(e) * static_cast<size_t>(rank()) + static_cast<size_t>(s)];
}
CoxeterSystem::Id CoxeterSystem::left(int s, Id e) const {
  return reg().left_tab[static_cast<size_t>(e) * static_cast<size_t>(rank()) + static_cast<size_t>(s)];
}
CoxeterSystem::Id CoxeterSystem::inv(Id e) const { return reg().inv_tab[e]; }

CoxeterSystem::Id CoxeterSystem::mul(Id a, Id b) const {
  const Registry& r = reg();
  return id_of_matrix(r.elems[a].mul(r.elems[b]));
}

int CoxeterSystem::len(Id e) const { return reg().lens[e]; }
uint64_t CoxeterSystem::inv_mask(Id e) const { return reg().masks[e]; }

SignedRoot CoxeterSystem::col_root(Id e, int s) const {
  return reg().colroot[static_cast<size_t>(e) * static_cast<size_t>(rank()) + static_cast<size_t>(s)];
}

SignedRoot CoxeterSystem::act_root(Id e, SignedRoot rt) const {
  const Registry& r = reg();
  int i = (rt > 0 ? rt : -rt) - 1;
  SignedRoot v = r.actpos[static_cast<size_t>(e) * static_cast<size_t>(num_positive_roots()) + static_cast<size_t>(i)];
  return rt > 0 ? v : static_cast<SignedRoot>(-v);
}

CoxeterSystem::Id CoxeterSystem::reflection_id(int root_idx) const {
  return reg().refl[static_cast<size_t>(root_idx)];
}

bool CoxeterSystem::bruhat_leq_ids(Id x, Id y) const {
  const Registry& r = reg();
  if (r.table_mode)
    return r.bruhat_rows[static_cast<size_t>(y) * r.row_words + x / 64] >> (x % 64) & 1;
  // Memoized lifting recursion for groups past the table budget.
  if (r.lens[x] > r.lens[y]) return false;
  if (x == 0) return true;
  if (x == y) return true;
  uint64_t key = static_cast<uint64_t>(x) * r.elems.size() + y;
  {
    std::lock_guard<std::mutex> g(r.memo_mutex);
    auto it = r.bruhat_memo.find(key);
    if (it != r.bruhat_memo.end()) return it->second != 0;
  }
  int s = -1;
  for (int t = 0; t < rank(); ++t) {
    if (r.masks[y] >> alpha_idx_[static_cast<size_t>(t)] & 1) {
      s = t;
      break;
    }
  }
  Id sy = left(s, y);
  Id sx = left(s, x);
  bool res = r.lens[sx] < r.lens[x] ? bruhat_leq_ids(sx, sy) : bruhat_leq_ids(x, sy);
  {
    std::lock_guard<std::mutex> g(r.memo_mutex);
    r.bruhat_memo.emplace(key, res ? 1 : 0);
  }
  return res;
}

std::vector<int> CoxeterSystem::lexmin_word(Id e) const {
  std::vector<int> word;
  Id cur = e;
  while (cur != 0) {
    int s = -1;
    for (int t = 0; t < rank(); ++t) {
      if (inv_mask(cur) >> alpha_idx_[static_cast<size_t>(t)] & 1) {
        s = t;
        break;
      }
    }
    check(s >= 0, "non-identity element has a left descent");
    word.push_back(s + 1);
    cur = left(s, cur);
  }
  return word;
}

// ---------------------------------------------------------------------------
// Free functions.
// ---------------------------------------------------------------------------

CoxeterSystem build_system(const CartanMatrix& cartan) { return CoxeterSystem(cartan); }

std::unique_ptr<CoxeterSystem> build_system_ptr(const CartanMatrix& cartan) {
  return std::make_unique<CoxeterSystem>(cartan);
}

Root act(const CoxeterSystem& sys, const GroupElement& w, const Root& v) {
  if (v.dim() != sys.rank()) throw DimensionMismatch("act: vector dimension mismatch");
  return w.matrix.act(v);
}

Weight act(const CoxeterSystem& sys, const GroupElement& w, const Weight& v) {
  if (static_cast<int>(v.size()) != sys.rank()) throw DimensionMismatch("act: vector dimension mismatch");
  Weight out(v.size(), Rational(0));
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j) out[static_cast<size_t>(i)] += Rational(w.matrix(i, j)) * v[static_cast<size_t>(j)];
  return out;
}

GroupElement reflection_of_root(const CoxeterSystem& sys, const Root& beta) {
  SignedRoot id = sys.signed_root_id(beta);  // throws NotARoot
  Root b = id > 0 ? beta : -beta;
  int n = sys.rank();
  long long bb = sys.form(b, b);
  num::IntMat m(n);
  for (int t = 0; t < n; ++t) {
    IntVec e(n);
    e[t] = 1;
    long long numv = 2 * sys.form(b, e);
    check(numv % bb == 0, "crystallographic reflection coefficients are integral");
    long long coef = numv / bb;
    for (int row = 0; row < n; ++row)
      m(row, t) = static_cast<int32_t>((row == t ? 1 : 0) - coef * b[row]);
  }
  GroupElement g{m, 0};
  g.length = length(sys, g);
  return g;
}

int length(const CoxeterSystem& sys, const GroupElement& w) {
  // ell(w) = ell(w^{-1}) = |{gamma in Phi+ : w(gamma) in Phi-}|, which avoids
  // inverting the matrix.
  int count = 0;
  for (const Root& g : sys.positive_roots())
    if (w.matrix.act(g).all_nonpos()) ++count;
  return count;
}

std::vector<Root> inversion_set(const CoxeterSystem& sys, const GroupElement& w) {
  // Inv(w) = Phi+ \cap w(Phi-) = { -w(gamma) : gamma in Phi+, w(gamma) in Phi- }.
  std::vector<std::pair<int, Root>> found;
  for (const Root& g : sys.positive_roots()) {
    Root img = w.matrix.act(g);
    if (img.all_nonpos()) {
      Root r = -img;
      found.emplace_back(sys.root_index(r), r);
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Root> out;
  out.reserve(found.size());
  for (auto& [i, r] : found) out.push_back(r);
  return out;
}

uint64_t inversion_mask(const CoxeterSystem& sys, const GroupElement& w) {
  uint64_t mask = 0;
  for (const Root& g : sys.positive_roots()) {
    Root img = w.matrix.act(g);
    if (img.all_nonpos()) {
      int i = sys.root_index(-img);
      check(i >= 0, "inversion images are roots");
      mask |= uint64_t{1} << i;
    }
  }
  return mask;
}

GroupElement element_from_word(const CoxeterSystem& sys, const std::vector<int>& word) {
  num::IntMat m = num::IntMat::identity(sys.rank());
  for (int letter : word) {
    if (letter < 1 || letter > sys.rank()) throw IndexOutOfRange("generator index out of range");
    m = m.mul(sys.simple_reflection(letter - 1));
  }
  GroupElement g{m, 0};
  g.length = length(sys, g);
  return g;
}

bool is_reduced(const CoxeterSystem& sys, const std::vector<int>& word) {
  // s_1...s_m is reduced iff every prefix sends the next simple root into Phi+.
  num::IntMat m = num::IntMat::identity(sys.rank());
  for (int letter : word) {
    if (letter < 1 || letter > sys.rank()) throw IndexOutOfRange("generator index out of range");
    if (!m.column(letter - 1).all_nonneg()) return false;
    m = m.mul(sys.simple_reflection(letter - 1));
  }
  return true;
}

bool weak_leq(const CoxeterSystem& sys, const GroupElement& x, const GroupElement& y) {
  uint64_t mx = inversion_mask(sys, x);
  uint64_t my = inversion_mask(sys, y);
  return (mx & ~my) == 0;
}

GroupElement multiply(const CoxeterSystem& sys, const GroupElement& a, const GroupElement& b) {
  GroupElement g{a.matrix.mul(b.matrix), 0};
  g.length = length(sys, g);
  return g;
}

GroupElement inverse_element(const CoxeterSystem& sys, const GroupElement& w) {
  GroupElement g{integer_inverse(w.matrix), w.length};
  check(length(sys, g) == w.length, "inverse has equal length");
  return g;
}

std::vector<int> canonical_word(const CoxeterSystem& sys, const GroupElement& w) {
  // Smallest left descent first yields the lexicographically smallest
  // reduced word.  Track w and w^{-1} to test descents with column signs.
  std::vector<int> word;
  num::IntMat m = w.matrix;
  num::IntMat minv = integer_inverse(m);
  num::IntMat id = num::IntMat::identity(sys.rank());
  while (m != id) {
    int s = -1;
    for (int t = 0; t < sys.rank(); ++t) {
      if (minv.column(t).all_nonpos()) {
        s = t;
        break;
      }
    }
    check(s >= 0, "non-identity element has a left descent");
    word.push_back(s + 1);
    m = sys.simple_reflection(s).mul(m);
    minv = minv.mul(sys.simple_reflection(s));
  }
  return word;
}

std::string format_element(const CoxeterSystem& sys, const GroupElement& w) {
  std::vector<int> word = canonical_word(sys, w);
  if (word.empty()) return "e";
  std::string out;
  for (int letter : word) out += static_cast<char>('0' + letter);
  return out;
}

GroupElement parse_element(const CoxeterSystem& sys, const std::string& text) {
  if (text.empty()) throw UsageError("empty element string");
  if (text == "e") return sys.identity_element();
  if (text == "w0") return sys.longest_element();
  std::vector<int> word;
  for (char ch : text) {
    if (ch < '1' || ch > '9') throw UsageError("element string must be 'e', 'w0', or generator digits");
    word.push_back(ch - '0');
  }
  return element_from_word(sys, word);
}

}  // namespace brickforge::coxeter

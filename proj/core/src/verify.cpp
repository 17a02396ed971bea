#include "brickforge/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <tuple>
#include <utility>

#include "brickforge/brick.hpp"
#include "brickforge/bruhat.hpp"
#include "brickforge/cartan.hpp"
#include "brickforge/coxeter.hpp"
#include "brickforge/errors.hpp"
#include "brickforge/geometry.hpp"
#include "brickforge/subword.hpp"

namespace brickforge::verify {
namespace {

using coxeter::CoxeterSystem;
using coxeter::GroupElement;
using coxeter::Root;
using geometry::QVec;
using num::IntVec;
using num::Rational;
using subword::Complex;
using subword::Facet;
using subword::Word;
using Id = CoxeterSystem::Id;

// Thrown to stop a sweep at its first counterexample.
struct Counterexample {
  std::string text;
};

const CoxeterSystem& system_by_name(const std::string& name) {
  static std::map<std::string, std::unique_ptr<CoxeterSystem>> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, coxeter::build_system_ptr(coxeter::preset_cartan(name))).first;
  return *it->second;
}

int word_cap(const SweepConfig& cfg, int rank) {
  if (cfg.max_word_length > 0) return cfg.max_word_length;
  return rank <= 2 ? 7 : 5;
}

// All words over {1..rank} of length 0..maxlen, shortest first, lexicographic
// within a length.
template <typename Fn>
void for_each_word(int rank, int maxlen, Fn&& fn) {
  for (int len = 0; len <= maxlen; ++len) {
    Word w(static_cast<size_t>(len), 1);
    while (true) {
      fn(w);
      int i = len - 1;
      while (i >= 0 && w[static_cast<size_t>(i)] == rank) w[static_cast<size_t>(i--)] = 1;
      if (i < 0) break;
      ++w[static_cast<size_t>(i)];
    }
  }
}

std::vector<Id> sweep_targets(const SweepConfig& cfg, const CoxeterSystem& sys, Id dem) {
  std::vector<Id> out;
  if (cfg.targets.empty()) {
    for (Id z = 0; z < static_cast<Id>(sys.group_size()); ++z)
      if (sys.bruhat_leq_ids(z, dem)) out.push_back(z);
    return out;
  }
  for (const std::string& t : cfg.targets) {
    const Id z = sys.id_of(coxeter::parse_element(sys, t));
    if (sys.bruhat_leq_ids(z, dem)) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string describe(const std::string& name, const Word& q, const CoxeterSystem& sys, Id z) {
  std::ostringstream os;
  os << "system=" << name << " word=" << subword::format_word(q)
     << " target=" << coxeter::format_element(sys, sys.element(z));
  return os.str();
}

std::string functional_text(const IntVec& f) {
  std::ostringstream os;
  os << "f=(";
  for (int i = 0; i < f.dim(); ++i) os << (i ? "," : "") << f[i];
  os << ")";
  return os.str();
}

std::string facet_text(const Facet& f) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << "}";
  return os.str();
}

std::string root_text(const Root& r) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < r.dim(); ++i) os << (i ? "," : "") << r[i];
  os << ")";
  return os.str();
}

std::string element_text(const CoxeterSystem& sys, Id e) {
  return coxeter::format_element(sys, sys.element(e));
}

uint64_t mix_seed(uint64_t seed, const std::string& sys_name, const Word& q, Id z) {
  uint64_t h = num::fnv1a64(&seed, sizeof(seed));
  h = num::hash_string(sys_name, h);
  for (int s : q) h = num::fnv1a64(&s, sizeof(s), h);
  uint32_t zz = z;
  return num::fnv1a64(&zz, sizeof(zz), h);
}

// Equals lexicographic order on the sorted position lists of equal-size sets.
bool mask_lex_less(uint64_t a, uint64_t b) {
  if (a == b) return false;
  const uint64_t d = a ^ b;
  return (a & (d & (~d + 1))) != 0;
}

bool in_hrep(const std::vector<QVec>& rows, const QVec& v) {
  for (const QVec& h : rows)
    if (geometry::dot(h, v) < 0) return false;
  return true;
}

const std::vector<QVec>& hrep_of(geometry::HrepCache& cache, int dim, std::vector<QVec> gens) {
  const geometry::RationalCone c = geometry::make_cone(dim, std::move(gens));
  return cache.halfspaces(dim, c.generators);
}

// Seeded admissible functionals for one instance.  The first entry is the
// all-ones covector (positive on the simple roots), the second the chamber
// covector of the target (positive on w(simple roots)); then one functional
// per E+ ray vanishing exactly there, then rejection-sampled integer vectors,
// padded with non-negative combinations that are admissible by construction.
class FunctionalPool {
 public:
  std::vector<IntVec> make(const Complex& sc, int want, uint64_t seed) {
    const CoxeterSystem& sys = sc.system();
    const int n = sys.rank();
    std::vector<IntVec> out;
    IntVec ones(n);
    for (int i = 0; i < n; ++i) ones[i] = 1;
    out.push_back(ones);
    out.push_back(brick::chamber_functional(sys, sc.target_id()));
    const std::vector<int>& ep = sc.eplus_root_indices();
    for (int b : ep) {
      const std::optional<IntVec> f = boundary(sys, ep, b);
      if (f) out.push_back(*f);
    }
    const int total = std::max(want, static_cast<int>(out.size()));
    num::Rng rng(seed);
    const int cap = 4 * total + 64;
    for (int attempts = 0; static_cast<int>(out.size()) < total && attempts < cap; ++attempts) {
      IntVec f(n);
      for (int i = 0; i < n; ++i) f[i] = static_cast<int32_t>(rng.uniform(-5, 5));
      if (brick::admissible(sc, f)) out.push_back(f);
    }
    if (static_cast<int>(out.size()) < total) {
      const std::vector<Id> ideal = bruhat::ideal_ids(sys, sc.target_id(), sc.demazure_id());
      while (static_cast<int>(out.size()) < total) {
        const Id z = ideal[static_cast<size_t>(
            rng.uniform(0, static_cast<long long>(ideal.size()) - 1))];
        const IntVec fz = brick::chamber_functional(sys, z);
        const long long a = rng.uniform(0, 3);
        const long long b = rng.uniform(1, 3);
        IntVec f(n);
        for (int i = 0; i < n; ++i) f[i] = static_cast<int32_t>(a + b * fz[i]);
        out.push_back(f);
      }
    }
    return out;
  }

 private:
  // First integer covector in the lexicographic scan of [-6,6]^n that
  // vanishes on beta and is positive on the other E+ rays; falls back to
  // non-negative when no strictly supporting covector fits the box.
  std::optional<IntVec> boundary(const CoxeterSystem& sys, const std::vector<int>& ep,
                                 int beta) {
    const auto key = std::make_tuple(&sys, ep, beta);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const int n = sys.rank();
    const std::vector<Root>& roots = sys.positive_roots();
    std::optional<IntVec> relaxed;
    std::optional<IntVec> found;
    std::vector<int> digit(static_cast<size_t>(n), 0);
    while (true) {
      IntVec f(n);
      bool zero = true;
      for (int i = 0; i < n; ++i) {
        f[i] = digit[static_cast<size_t>(i)] - 6;
        if (f[i] != 0) zero = false;
      }
      if (!zero && brick::apply(f, roots[static_cast<size_t>(beta)]) == 0) {
        bool strict = true;
        bool relax = true;
        for (int b : ep) {
          if (b == beta) continue;
          const long long v = brick::apply(f, roots[static_cast<size_t>(b)]);
          if (v <= 0) strict = false;
          if (v < 0) {
            relax = false;
            break;
          }
        }
        if (strict) {
          found = f;
          break;
        }
        if (relax && !relaxed) relaxed = f;
      }
      int i = n - 1;
      while (i >= 0 && digit[static_cast<size_t>(i)] == 12) digit[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++digit[static_cast<size_t>(i)];
    }
    if (!found) found = relaxed;
    memo_.emplace(key, found);
    return found;
  }

  std::map<std::tuple<const CoxeterSystem*, std::vector<int>, int>, std::optional<IntVec>> memo_;
};

CheckOutcome check_cone_equality(const SweepConfig& cfg) {
  CheckOutcome out{"cone_equality", false, 0, {}};
  geometry::HrepCache cache;
  try {
    for (const std::string& name : cfg.systems) {
      const CoxeterSystem& sys = system_by_name(name);
      const int n = sys.rank();
      for_each_word(n, word_cap(cfg, n), [&](const Word& q) {
        const Id dem = sys.id_of(subword::demazure_product(sys, q));
        for (Id z : sweep_targets(cfg, sys, dem)) {
          try {
            Complex sc(sys, q, sys.element(z));
            std::vector<geometry::RationalCone> cones;
            for (const Facet& fa : sc.facets()) {
              std::vector<QVec> gens;
              for (const Root& r : sc.root_configuration(fa)) gens.push_back(num::to_qvec(r));
              geometry::RationalCone c = geometry::make_cone(n, std::move(gens));
              c.halfspaces = cache.halfspaces(n, c.generators);
              cones.push_back(std::move(c));
            }
            const geometry::RationalCone inter = geometry::cone_intersect(cones);
            std::vector<QVec> ep;
            for (int b : sc.eplus_root_indices())
              ep.push_back(num::to_qvec(sys.positive_roots()[static_cast<size_t>(b)]));
            geometry::RationalCone epc = geometry::make_cone(n, std::move(ep));
            epc.halfspaces = cache.halfspaces(n, epc.generators);
            if (!geometry::cone_equal(inter, epc))
              throw Counterexample{describe(name, q, sys, z) +
                                   ": intersection of facet cones differs from cone(E+)"};
            ++out.cases;
          } catch (const Error& e) {
            throw Counterexample{describe(name, q, sys, z) + ": " + e.what()};
          }
        }
      });
    }
    out.passed = true;
  } catch (const Counterexample& c) {
    out.failure = c.text;
  }
  return out;
}

CheckOutcome check_antigreedy_uniqueness(const SweepConfig& cfg) {
  CheckOutcome out{"antigreedy_uniqueness", false, 0, {}};
  FunctionalPool pool;
  try {
    for (const std::string& name : cfg.systems) {
      const CoxeterSystem& sys = system_by_name(name);
      const int n = sys.rank();
      for_each_word(n, word_cap(cfg, n), [&](const Word& q) {
        const Id dem = sys.id_of(subword::demazure_product(sys, q));
        for (Id z : sweep_targets(cfg, sys, dem)) {
          try {
            Complex sc(sys, q, sys.element(z));
            const std::vector<Facet>& facets = sc.facets();
            const std::vector<std::vector<int16_t>>& rids = sc.facet_root_ids();
            const uint64_t emask = sc.eplus_mask();
            // flattened (root, positive, index) entries per facet
            struct Entry {
              Root root;
              bool positive;
              int ridx;
            };
            std::vector<std::vector<Entry>> data(facets.size());
            for (size_t fi = 0; fi < facets.size(); ++fi)
              for (int p : facets[fi]) {
                const int16_t rid = rids[fi][static_cast<size_t>(p) - 1];
                data[fi].push_back(
                    {sys.root_of(rid), rid > 0, rid > 0 ? rid - 1 : -rid - 1});
              }
            const std::vector<IntVec> funcs =
                pool.make(sc, cfg.functional_samples, mix_seed(cfg.seed, name, q, z));
            for (size_t which = 0; which < funcs.size(); ++which) {
              const IntVec& f = funcs[which];
              const brick::AntigreedyTrace tr = brick::f_antigreedy(sc, f);
              const std::optional<int> idx = sc.facet_index(tr.facet);
              if (!idx)
                throw Counterexample{describe(name, q, sys, z) + " " + functional_text(f) +
                                     ": scan output is not a listed facet"};
              int match = -1;
              bool multiple = false;
              for (size_t fi = 0; fi < facets.size(); ++fi) {
                bool pass = true;
                for (const Entry& en : data[fi]) {
                  const long long v = brick::apply(f, en.root);
                  if (v < 0 || (v == 0 && en.positive && !(emask >> en.ridx & 1))) {
                    pass = false;
                    break;
                  }
                }
                if (!pass) continue;
                if (match >= 0) multiple = true;
                match = static_cast<int>(fi);
              }
              if (multiple || match != *idx)
                throw Counterexample{describe(name, q, sys, z) + " " + functional_text(f) +
                                     ": facets passing the sign conditions are not exactly " +
                                     facet_text(tr.facet)};
              if (which == 0 && tr.facet != sc.greedy_facet())
                throw Counterexample{describe(name, q, sys, z) +
                                     ": positive functional does not yield the greedy facet"};
              if (which == 1 && tr.facet != sc.antigreedy_facet())
                throw Counterexample{
                    describe(name, q, sys, z) +
                    ": chamber functional does not yield the antigreedy facet"};
              ++out.cases;
            }
          } catch (const Error& e) {
            throw Counterexample{describe(name, q, sys, z) + ": " + e.what()};
          }
        }
      });
    }
    out.passed = true;
  } catch (const Counterexample& c) {
    out.failure = c.text;
  }
  return out;
}

CheckOutcome check_sc_f_components(const SweepConfig& cfg) {
  CheckOutcome out{"sc_f_components", false, 0, {}};
  FunctionalPool pool;
  try {
    for (const std::string& name : cfg.systems) {
      const CoxeterSystem& sys = system_by_name(name);
      const int n = sys.rank();
      for_each_word(n, word_cap(cfg, n), [&](const Word& q) {
        const Id dem = sys.id_of(subword::demazure_product(sys, q));
        for (Id z : sweep_targets(cfg, sys, dem)) {
          try {
            Complex sc(sys, q, sys.element(z));
            const std::vector<Facet>& facets = sc.facets();
            const std::vector<std::vector<int16_t>>& rids = sc.facet_root_ids();
            // flip edges: (neighbour index, root at the flipped position)
            std::vector<std::vector<std::pair<int, Root>>> edges(facets.size());
            for (size_t fi = 0; fi < facets.size(); ++fi)
              for (int p : facets[fi]) {
                if (!sc.flippable(facets[fi], p)) continue;
                const auto [g, j] = sc.flip(facets[fi], p);
                (void)j;
                const std::optional<int> gi = sc.facet_index(g);
                check(gi.has_value(), "flip lands on a facet");
                edges[fi].push_back(
                    {*gi, sys.root_of(rids[fi][static_cast<size_t>(p) - 1])});
              }
            std::map<std::vector<int>, std::vector<Facet>> reduced_memo;
            const std::vector<IntVec> funcs =
                pool.make(sc, cfg.functional_samples, mix_seed(cfg.seed, name, q, z));
            for (const IntVec& f : funcs) {
              const std::vector<int> sel = brick::sc_f_facet_indices(sc, f);
              const brick::AntigreedyTrace tr = brick::f_antigreedy(sc, f);
              const int start = *sc.facet_index(tr.facet);
              if (!std::binary_search(sel.begin(), sel.end(), start))
                throw Counterexample{describe(name, q, sys, z) + " " + functional_text(f) +
                                     ": scan output lies outside SC_f"};
              // connected component of the f-preserving flip graph
              std::vector<char> seen(facets.size(), 0);
              std::vector<int> stack{start};
              seen[static_cast<size_t>(start)] = 1;
              std::vector<int> comp;
              while (!stack.empty()) {
                const int cur = stack.back();
                stack.pop_back();
                comp.push_back(cur);
                for (const auto& [to, root] : edges[static_cast<size_t>(cur)])
                  if (!seen[static_cast<size_t>(to)] && brick::apply(f, root) == 0) {
                    seen[static_cast<size_t>(to)] = 1;
                    stack.push_back(to);
                  }
              }
              std::sort(comp.begin(), comp.end());
              if (comp != sel)
                throw Counterexample{describe(name, q, sys, z) + " " + functional_text(f) +
                                     ": SC_f is not one component of the f-preserving flips"};
              // deleted positions: f-positive entries, identical across SC_f
              std::vector<int> deleted;
              for (int p : facets[static_cast<size_t>(sel.front())])
                if (brick::apply(f, sys.root_of(rids[static_cast<size_t>(sel.front())]
                                                    [static_cast<size_t>(p) - 1])) > 0)
                  deleted.push_back(p);
              for (int fi : sel) {
                std::vector<int> d2;
                for (int p : facets[static_cast<size_t>(fi)])
                  if (brick::apply(f, sys.root_of(rids[static_cast<size_t>(fi)]
                                                      [static_cast<size_t>(p) - 1])) > 0)
                    d2.push_back(p);
                if (d2 != deleted)
                  throw Counterexample{describe(name, q, sys, z) + " " + functional_text(f) +
                                       ": f-positive positions differ across SC_f"};
              }
              // isomorphism with the complex on the shortened word
              auto memo = reduced_memo.find(deleted);
              if (memo == reduced_memo.end()) {
                Word shorter;
                for (int p = 1; p <= sc.size(); ++p)
                  if (!std::binary_search(deleted.begin(), deleted.end(), p))
                    shorter.push_back(q[static_cast<size_t>(p) - 1]);
                Complex rc(sys, shorter, sys.element(z));
                memo = reduced_memo.emplace(deleted, rc.facets()).first;
              }
              std::vector<Facet> mapped;
              for (int fi : sel) {
                Facet im;
                for (int p : facets[static_cast<size_t>(fi)]) {
                  if (std::binary_search(deleted.begin(), deleted.end(), p)) continue;
                  const int shift = static_cast<int>(
                      std::lower_bound(deleted.begin(), deleted.end(), p) - deleted.begin());
                  im.push_back(p - shift);
                }
                mapped.push_back(std::move(im));
              }
              std::sort(mapped.begin(), mapped.end());
              if (mapped != memo->second)
                throw Counterexample{describe(name, q, sys, z) + " " + functional_text(f) +
                                     ": SC_f does not match the complex on the shortened word"};
              ++out.cases;
            }
          } catch (const Error& e) {
            throw Counterexample{describe(name, q, sys, z) + ": " + e.what()};
          }
        }
      });
    }
    out.passed = true;
  } catch (const Counterexample& c) {
    out.failure = c.text;
  }
  return out;
}

CheckOutcome check_brick_polyhedron(const SweepConfig& cfg) {
  CheckOutcome out{"brick_polyhedron", false, 0, {}};
  struct StoredPoly {
    std::vector<geometry::HalfspaceQ> rows;
    std::vector<QVec> points;
    std::vector<QVec> rays;
  };
  try {
    for (const std::string& name : cfg.systems) {
      const CoxeterSystem& sys = system_by_name(name);
      const int n = sys.rank();
      for_each_word(n, word_cap(cfg, n), [&](const Word& q) {
        const Id dem = sys.id_of(subword::demazure_product(sys, q));
        std::map<Id, StoredPoly> stored;
        for (Id z : sweep_targets(cfg, sys, dem)) {
          try {
            Complex sc(sys, q, sys.element(z));
            // V=H equality, vertex criterion and kappa exactness are asserted
            // inside these constructions.
            const brick::BrickPolyhedron bp = brick::brick_polyhedron(sc);
            const brick::NormalFan fan = brick::normal_fan(sc);
            (void)fan;
            const std::vector<Facet>& facets = sc.facets();
            const std::vector<std::vector<int16_t>>& rids = sc.facet_root_ids();
            for (size_t fi = 0; fi < facets.size(); ++fi)
              for (int p : facets[fi]) {
                if (!sc.flippable(facets[fi], p)) continue;
                const auto [g, j] = sc.flip(facets[fi], p);
                (void)j;
                const int gi = *sc.facet_index(g);
                const Root r = sys.root_of(rids[fi][static_cast<size_t>(p) - 1]);
                QVec diff(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i)
                  diff[static_cast<size_t>(i)] =
                      bp.brick_vectors[static_cast<size_t>(gi)][static_cast<size_t>(i)] -
                      bp.brick_vectors[fi][static_cast<size_t>(i)];
                int pivot = -1;
                for (int i = 0; i < n; ++i)
                  if (r[i] != 0) {
                    pivot = i;
                    break;
                  }
                const Rational c = diff[static_cast<size_t>(pivot)] / r[pivot];
                bool proportional = c > 0;
                for (int i = 0; proportional && i < n; ++i)
                  if (diff[static_cast<size_t>(i)] != c * Rational(r[i])) proportional = false;
                if (!proportional)
                  throw Counterexample{describe(name, q, sys, z) + ": flip of " +
                                       facet_text(facets[fi]) + " at position " +
                                       std::to_string(p) +
                                       " does not move the brick vector along " + root_text(r)};
              }
            check(bp.poly.halfspaces.has_value(), "brick polyhedron carries an H-description");
            stored.emplace(z, StoredPoly{*bp.poly.halfspaces, bp.poly.points, bp.poly.rays});
            ++out.cases;
          } catch (const Error& e) {
            throw Counterexample{describe(name, q, sys, z) + ": " + e.what()};
          }
        }
        // containment along right weak covers under the same word
        for (const auto& [z, lo] : stored) {
          for (int s0 = 0; s0 < n; ++s0) {
            const Id zs = sys.right(z, s0);
            if (sys.len(zs) != sys.len(z) + 1) continue;
            const auto it = stored.find(zs);
            if (it == stored.end()) continue;
            for (const QVec& p : it->second.points)
              if (!geometry::rows_satisfy_point(lo.rows, p))
                throw Counterexample{
                    describe(name, q, sys, zs) +
                    ": brick polyhedron escapes the one of the shorter target " +
                    element_text(sys, z)};
            for (const QVec& r : it->second.rays)
              if (!geometry::rows_satisfy_ray(lo.rows, r))
                throw Counterexample{
                    describe(name, q, sys, zs) +
                    ": recession cone escapes the one of the shorter target " +
                    element_text(sys, z)};
            ++out.cases;
          }
        }
      });
    }
    out.passed = true;
  } catch (const Counterexample& c) {
    out.failure = c.text;
  }
  return out;
}

CheckOutcome check_dyer(const SweepConfig& cfg) {
  CheckOutcome out{"dyer", false, 0, {}};
  geometry::HrepCache cache;
  try {
    for (const std::string& name : cfg.systems) {
      const CoxeterSystem& sys = system_by_name(name);
      const int n = sys.rank();
      const Id w0 = sys.id_longest();
      const Id size = static_cast<Id>(sys.group_size());
      const std::vector<Root>& roots = sys.positive_roots();
      const int np = sys.num_positive_roots();
      std::map<std::pair<Id, Id>, std::vector<int>> eplus_memo;
      const auto eplus = [&](Id x, Id y) -> const std::vector<int>& {
        auto it = eplus_memo.find({x, y});
        if (it == eplus_memo.end())
          it = eplus_memo.emplace(std::make_pair(x, y), bruhat::eplus_ids(sys, x, y)).first;
        return it->second;
      };
      const auto qvecs = [&](const std::vector<int>& idx) {
        std::vector<QVec> gens;
        gens.reserve(idx.size());
        for (int i : idx) gens.push_back(num::to_qvec(roots[static_cast<size_t>(i)]));
        return gens;
      };
      const auto pair_text = [&](Id x, Id y) {
        return "system=" + name + " x=" + element_text(sys, x) + " y=" + element_text(sys, y);
      };

      // per-element statements: zero overlap, root coverage, root points
      for (Id w = 0; w < size; ++w) {
        try {
          std::vector<Root> below;
          for (int i : bruhat::eminus_ids(sys, 0, w)) below.push_back(roots[static_cast<size_t>(i)]);
          std::vector<Root> above;
          for (int i : eplus(w, w0)) above.push_back(roots[static_cast<size_t>(i)]);
          // extremality of the labels is asserted inside bruhat_cone
          geometry::RationalCone cm = bruhat::bruhat_cone(sys, below);
          geometry::RationalCone cp = bruhat::bruhat_cone(sys, above);
          cm.halfspaces = cache.halfspaces(n, cm.generators);
          cp.halfspaces = cache.halfspaces(n, cp.generators);
          const geometry::RationalCone inter = geometry::cone_intersect({cm, cp});
          if (!inter.generators.empty())
            throw Counterexample{"system=" + name + " w=" + element_text(sys, w) +
                                 ": lower and upper interval cones overlap"};
          const uint64_t minv = sys.inv_mask(w);
          const uint64_t pinv = sys.inv_mask(sys.mul(w, w0));
          for (int i = 0; i < np; ++i) {
            const QVec pos = num::to_qvec(roots[static_cast<size_t>(i)]);
            const QVec neg = geometry::negated(pos);
            const bool inm = in_hrep(*cm.halfspaces, pos);
            const bool inp = in_hrep(*cp.halfspaces, pos);
            if (!inm && !inp)
              throw Counterexample{"system=" + name + " w=" + element_text(sys, w) + " root " +
                                   root_text(roots[static_cast<size_t>(i)]) +
                                   ": positive root escapes both interval cones"};
            if (inm != ((minv >> i & 1) != 0) ||
                in_hrep(*cm.halfspaces, neg))
              throw Counterexample{"system=" + name + " w=" + element_text(sys, w) +
                                   ": lower cone root points differ from Inv(w)"};
            if (inp != ((pinv >> i & 1) != 0) ||
                in_hrep(*cp.halfspaces, neg))
              throw Counterexample{"system=" + name + " w=" + element_text(sys, w) +
                                   ": upper cone root points differ from Inv(w w0)"};
          }
          ++out.cases;
        } catch (const Error& e) {
          throw Counterexample{"system=" + name + " w=" + element_text(sys, w) + ": " + e.what()};
        }
      }

      // pair statements
      const auto run_pair = [&](Id x, Id y) {
        if (!sys.bruhat_leq_ids(x, y)) return;
        try {
          const std::vector<int> epxy = eplus(x, y);
          const std::vector<QVec> gxy = qvecs(epxy);
          for (int bi : epxy) {
            const Id sbx = sys.mul(sys.reflection_id(bi), x);
            std::vector<QVec> ext = qvecs(eplus(sbx, y));
            ext.push_back(num::to_qvec(roots[static_cast<size_t>(bi)]));
            ext.push_back(geometry::negated(ext.back()));
            const std::vector<QVec>& rows = hrep_of(cache, n, std::move(ext));
            for (const QVec& g : gxy)
              if (!in_hrep(rows, g))
                throw Counterexample{pair_text(x, y) + " atom root " +
                                     root_text(roots[static_cast<size_t>(bi)]) +
                                     ": interval cone escapes the contracted cone"};
          }
          const std::vector<QVec>& rows = hrep_of(cache, n, gxy);
          for (int bi = 0; bi < np; ++bi) {
            const Id sbx = sys.mul(sys.reflection_id(bi), x);
            if (sys.len(sbx) <= sys.len(x) || !sys.bruhat_leq_ids(sbx, y)) continue;
            if (!in_hrep(rows, num::to_qvec(roots[static_cast<size_t>(bi)])))
              throw Counterexample{pair_text(x, y) + ": ascending reflection root " +
                                   root_text(roots[static_cast<size_t>(bi)]) +
                                   " misses the interval cone"};
          }
          ++out.cases;
        } catch (const Error& e) {
          throw Counterexample{pair_text(x, y) + ": " + e.what()};
        }
      };

      // triple statements
      const auto run_triple = [&](Id x, Id y, int s0) {
        if (!sys.bruhat_leq_ids(x, y)) return;
        try {
          const std::vector<int> epxy = eplus(x, y);
          const Id sy = sys.left(s0, y);
          if (sys.len(sy) == sys.len(y) + 1) {
            std::vector<QVec> ext = qvecs(epxy);
            ext.push_back(num::to_qvec(roots[static_cast<size_t>(sys.alpha_index(s0))]));
            const std::vector<QVec>& rows = hrep_of(cache, n, std::move(ext));
            for (const QVec& g : qvecs(eplus(x, sy)))
              if (!in_hrep(rows, g))
                throw Counterexample{pair_text(x, y) + " s=" + std::to_string(s0 + 1) +
                                     ": cone of the raised interval leaves cone(E+, alpha_s)"};
            ++out.cases;
          }
          const Id sx = sys.left(s0, x);
          if (sys.len(sx) == sys.len(x) - 1) {
            const Id tau = sys.len(sy) < sys.len(y) ? sy : y;
            check(sys.bruhat_leq_ids(sx, tau), "lifting keeps the lowered element below");
            const std::vector<QVec>& rows = hrep_of(cache, n, qvecs(eplus(sx, tau)));
            const Id simple = sys.right(sys.id_identity(), s0);
            for (int bi : epxy) {
              const QVec g =
                  num::to_qvec(sys.root_of(sys.act_root(simple, static_cast<int16_t>(bi + 1))));
              if (!in_hrep(rows, g))
                throw Counterexample{pair_text(x, y) + " s=" + std::to_string(s0 + 1) +
                                     ": reflected cone escapes the left-lowered interval"};
            }
            ++out.cases;
          }
          const Id xs = sys.right(x, s0);
          if (sys.len(xs) == sys.len(x) - 1) {
            const Id ys = sys.right(y, s0);
            const Id tau = sys.len(ys) < sys.len(y) ? ys : y;
            check(sys.bruhat_leq_ids(xs, tau), "lifting keeps the lowered element below");
            const std::vector<QVec>& rows = hrep_of(cache, n, qvecs(eplus(xs, tau)));
            for (const QVec& g : qvecs(epxy))
              if (!in_hrep(rows, g))
                throw Counterexample{pair_text(x, y) + " s=" + std::to_string(s0 + 1) +
                                     ": cone escapes the right-lowered interval"};
            ++out.cases;
          }
        } catch (const Error& e) {
          throw Counterexample{pair_text(x, y) + " s=" + std::to_string(s0 + 1) + ": " +
                               e.what()};
        }
      };

      if (n <= 2) {
        for (Id x = 0; x < size; ++x)
          for (Id y = 0; y < size; ++y) {
            run_pair(x, y);
            for (int s0 = 0; s0 < n; ++s0) run_triple(x, y, s0);
          }
      } else {
        uint64_t h = num::fnv1a64(&cfg.seed, sizeof(cfg.seed));
        h = num::hash_string("dyer", h);
        num::Rng rng(num::hash_string(name, h));
        for (long long t = 0; t < cfg.triple_samples; ++t) {
          const Id x = static_cast<Id>(rng.uniform(0, static_cast<long long>(size) - 1));
          const Id y = static_cast<Id>(rng.uniform(0, static_cast<long long>(size) - 1));
          const int s0 = static_cast<int>(rng.uniform(0, n - 1));
          run_pair(x, y);
          run_triple(x, y, s0);
        }
      }
    }
    out.passed = true;
  } catch (const Counterexample& c) {
    out.failure = c.text;
  }
  return out;
}

CheckOutcome check_oracle_facets(const SweepConfig& cfg) {
  CheckOutcome out{"oracle_facets", false, 0, {}};
  try {
    for (const std::string& name : cfg.systems) {
      const CoxeterSystem& sys = system_by_name(name);
      const int n = sys.rank();
      for_each_word(n, word_cap(cfg, n), [&](const Word& q) {
        const Id dem = sys.id_of(subword::demazure_product(sys, q));
        const int m = static_cast<int>(q.size());
        for (Id z : sweep_targets(cfg, sys, dem)) {
          try {
            Complex sc(sys, q, sys.element(z));
            const int k = m - sys.len(z);
            std::vector<uint64_t> brute;
            for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
              if (std::popcount(mask) != k) continue;
              Facet f;
              for (int p = 1; p <= m; ++p)
                if (mask >> (p - 1) & 1) f.push_back(p);
              if (sc.is_facet(f)) brute.push_back(mask);
            }
            std::sort(brute.begin(), brute.end(), mask_lex_less);
            if (brute != sc.facet_masks())
              throw Counterexample{describe(name, q, sys, z) +
                                   ": flip enumeration disagrees with the subset scan"};
            ++out.cases;
          } catch (const Error& e) {
            throw Counterexample{describe(name, q, sys, z) + ": " + e.what()};
          }
        }
      });
    }
    out.passed = true;
  } catch (const Counterexample& c) {
    out.failure = c.text;
  }
  return out;
}

CheckOutcome check_oracle_bruhat(const SweepConfig& cfg) {
  CheckOutcome out{"oracle_bruhat", false, 0, {}};
  try {
    for (const std::string& name : cfg.systems) {
      const CoxeterSystem& sys = system_by_name(name);
      const Id size = static_cast<Id>(sys.group_size());
      const size_t words = (static_cast<size_t>(size) + 63) / 64;
      for (Id y = 0; y < size; ++y) {
        // subword property: x <= y iff x is a subword product of one fixed
        // reduced word of y
        std::vector<uint64_t> reach(words, 0);
        reach[0] = 1;
        for (int letter : sys.lexmin_word(y)) {
          std::vector<uint64_t> next = reach;
          for (size_t blk = 0; blk < words; ++blk) {
            uint64_t bits = reach[blk];
            while (bits) {
              const int b = std::countr_zero(bits);
              bits &= bits - 1;
              const Id to = sys.right(static_cast<Id>(blk * 64 + static_cast<size_t>(b)),
                                      letter - 1);
              next[to / 64] |= uint64_t{1} << (to % 64);
            }
          }
          reach = std::move(next);
        }
        for (Id x = 0; x < size; ++x) {
          const bool dp = (reach[x / 64] >> (x % 64) & 1) != 0;
          if (dp != sys.bruhat_leq_ids(x, y))
            throw Counterexample{"system=" + name + " x=" + element_text(sys, x) +
                                 " y=" + element_text(sys, y) +
                                 ": Bruhat order disagrees with the subword oracle"};
          ++out.cases;
        }
      }
    }
    out.passed = true;
  } catch (const Counterexample& c) {
    out.failure = c.text;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "cone_equality",    "antigreedy_uniqueness", "sc_f_components", "brick_polyhedron",
      "dyer",             "oracle_facets",         "oracle_bruhat"};
  return names;
}

bool is_check_name(const std::string& name) {
  const std::vector<std::string>& names = check_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

CheckOutcome run_check(const std::string& name, const SweepConfig& cfg) {
  if (name == "cone_equality") return check_cone_equality(cfg);
  if (name == "antigreedy_uniqueness") return check_antigreedy_uniqueness(cfg);
  if (name == "sc_f_components") return check_sc_f_components(cfg);
  if (name == "brick_polyhedron") return check_brick_polyhedron(cfg);
  if (name == "dyer") return check_dyer(cfg);
  if (name == "oracle_facets") return check_oracle_facets(cfg);
  if (name == "oracle_bruhat") return check_oracle_bruhat(cfg);
  throw UsageError("unknown check: " + name);
}

std::vector<CheckOutcome> run_checks(const std::vector<std::string>& names,
                                     const SweepConfig& cfg) {
  std::vector<CheckOutcome> out;
  out.reserve(names.size());
  for (const std::string& name : names) out.push_back(run_check(name, cfg));
  return out;
}

}  // namespace brickforge::verify

#include "brickforge/brick.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "brickforge/errors.hpp"

namespace brickforge::brick {

using coxeter::SignedRoot;
using geometry::QVec;
using num::IntMat;
using num::IntVec;
using num::Rational;
using Id = CoxeterSystem::Id;

namespace {

constexpr uint64_t bit(int pos1) { return uint64_t{1} << (pos1 - 1); }

uint64_t mask_of(const Facet& f) {
  uint64_t m = 0;
  for (int p : f) m |= bit(p);
  return m;
}

// Roots at the facet positions as canonical rational vectors.
std::vector<QVec> facet_position_roots(const Complex& sc, int fi) {
  const std::vector<int16_t>& rid = sc.facet_root_ids()[static_cast<size_t>(fi)];
  std::vector<QVec> out;
  out.reserve(sc.facets()[static_cast<size_t>(fi)].size());
  for (int p : sc.facets()[static_cast<size_t>(fi)])
    out.push_back(num::to_qvec(sc.system().root_of(rid[static_cast<size_t>(p) - 1])));
  return out;
}

IntVec qvec_to_intvec(const QVec& v) {
  IntVec out(static_cast<int>(v.size()));
  for (size_t i = 0; i < v.size(); ++i) {
    check(boost::multiprecision::denominator(v[i]) == 1, "vector must be integral");
    out[static_cast<int>(i)] =
        static_cast<int32_t>(boost::multiprecision::numerator(v[i]).convert_to<long long>());
  }
  return out;
}

}  // namespace

long long apply(const Functional& f, const Root& r) {
  if (f.dim() != r.dim()) throw DimensionMismatch("functional and root dimensions differ");
  long long acc = 0;
  for (int i = 0; i < f.dim(); ++i) acc += static_cast<long long>(f[i]) * r[i];
  return acc;
}

bool admissible(const Complex& sc, const Functional& f) {
  if (f.dim() != sc.system().rank()) throw DimensionMismatch("functional dimension mismatch");
  for (int b : sc.eplus_root_indices())
    if (apply(f, sc.system().positive_roots()[static_cast<size_t>(b)]) < 0) return false;
  return true;
}

AntigreedyTrace f_antigreedy(const Complex& sc, const Functional& f) {
  const CoxeterSystem& sys = sc.system();
  if (!admissible(sc, f))
    throw FunctionalNotNonnegative("functional is negative on E+(w, Dem(Q))");
  const Id w = sc.target_id();
  const uint64_t wmask = sys.inv_mask(w);
  const int m = sc.size();
  AntigreedyTrace out;
  out.steps.reserve(static_cast<size_t>(m));
  Id v = sys.id_identity();
  Id u = w;  // v^{-1} w
  for (int k = 1; k <= m; ++k) {
    const int s = sc.letter0(k);
    const SignedRoot beta = sys.col_root(v, s);
    const Root beta_root = sys.root_of(beta);
    const long long fv = apply(f, beta_root);
    int rule;
    if (fv < 0) {
      rule = 4;
    } else if (beta < 0) {
      rule = 2;
    } else {
      const Id vs = sys.right(v, s);
      const bool weak = (sys.inv_mask(vs) & ~wmask) == 0;  // v s <=_R w
      if (fv == 0) {
        rule = weak ? 5 : 1;
      } else if (!weak) {
        rule = 1;
      } else {
        rule = sys.bruhat_leq_ids(u, sc.suffix_demazure(k + 1)) ? 3 : 6;
      }
    }
    if (rule <= 3) {
      check(sys.bruhat_leq_ids(u, sc.suffix_demazure(k + 1)),
            "keeping the position must leave the target reachable");
      out.facet.push_back(k);
    } else {
      check(beta > 0, "prefix extension keeps the complement reduced");
      const Id su = sys.left(s, u);
      check(sys.len(su) < sys.len(u) && sys.bruhat_leq_ids(su, sc.suffix_demazure(k + 1)),
            "prefix extension must leave the target reachable");
      v = sys.right(v, s);
      u = su;
    }
    out.steps.push_back({k, beta_root, rule, sys.element(v), out.facet});
  }
  check(v == w && u == sys.id_identity(), "scan must exhaust the target");
  check(sc.is_facet(out.facet), "antigreedy scan output is a facet");
  // f >= 0 on the root configuration, and f vanishes only on E+ roots or on
  // negative roots.
  const uint64_t emask = sc.eplus_mask();
  for (const StepRecord& st : out.steps) {
    if (st.rule > 3) continue;
    const long long fr = apply(f, st.beta);
    check(fr >= 0, "functional is non-negative on the facet root configuration");
    if (fr == 0 && st.beta.all_nonneg()) {
      const int ridx = sys.root_index(st.beta);
      check(ridx >= 0 && (emask & (uint64_t{1} << ridx)) != 0,
            "zero-set positive roots lie in E+(w, Dem(Q))");
    }
  }
  return out;
}

std::vector<int> sc_f_facet_indices(const Complex& sc, const Functional& f) {
  if (f.dim() != sc.system().rank()) throw DimensionMismatch("functional dimension mismatch");
  const CoxeterSystem& sys = sc.system();
  std::vector<int> out;
  const std::vector<uint64_t>& masks = sc.facet_masks();
  const std::vector<std::vector<int16_t>>& rids = sc.facet_root_ids();
  for (size_t fi = 0; fi < masks.size(); ++fi) {
    bool ok = true;
    for (int k = 1; ok && k <= sc.size(); ++k) {
      if (!(masks[fi] & bit(k))) continue;
      if (apply(f, sys.root_of(rids[fi][static_cast<size_t>(k) - 1])) < 0) ok = false;
    }
    if (ok) out.push_back(static_cast<int>(fi));
  }
  check(out.empty() == !admissible(sc, f),
        "SC_f is non-empty exactly for admissible functionals");
  return out;
}

std::vector<Facet> sc_f_facets(const Complex& sc, const Functional& f) {
  std::vector<Facet> out;
  for (int fi : sc_f_facet_indices(sc, f)) out.push_back(sc.facets()[static_cast<size_t>(fi)]);
  return out;
}

geometry::QVec brick_vector(const Complex& sc, const Facet& I) {
  if (!sc.is_facet(I)) throw PreconditionFailed("brick vectors are defined for facets");
  const CoxeterSystem& sys = sc.system();
  const int n = sys.rank();
  const uint64_t mask = mask_of(I);
  std::array<long long, num::kMaxRank> acc{};
  IntMat mat = IntMat::identity(n);
  for (int k = 1; k <= sc.size(); ++k) {
    const int s = sc.letter0(k);
    const IntVec sw = mat.act(sys.weights_scaled()[static_cast<size_t>(s)]);
    for (int i = 0; i < n; ++i) acc[static_cast<size_t>(i)] += sw[i];
    if (!(mask & bit(k))) mat = mat.mul(sys.simple_reflection(s));
  }
  QVec out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = Rational(-acc[static_cast<size_t>(i)]) / sys.weight_denominator();
  return out;
}

BrickPolyhedron brick_polyhedron(const Complex& sc) {
  const CoxeterSystem& sys = sc.system();
  const int n = sys.rank();
  const std::vector<Facet>& facets = sc.facets();
  BrickPolyhedron bp;
  bp.instance = &sc;
  bp.polytopal = sc.target_id() == sc.demazure_id();
  for (size_t fi = 0; fi < facets.size(); ++fi)
    bp.brick_vectors.push_back(brick_vector(sc, facets[fi]));
  for (int b : sc.eplus_root_indices())
    bp.recession_rays.push_back(num::to_qvec(sys.positive_roots()[static_cast<size_t>(b)]));
  check(bp.polytopal == bp.recession_rays.empty(),
        "bounded exactly when the target equals the Demazure product");

  geometry::HrepCache cache;
  std::vector<geometry::HalfspaceQ> rows;
  for (size_t fi = 0; fi < facets.size(); ++fi) {
    const std::vector<QVec> roots = facet_position_roots(sc, static_cast<int>(fi));
    if (geometry::is_pointed(geometry::make_cone(n, roots)))
      bp.vertex_facets.push_back(static_cast<int>(fi));
    for (const QVec& h : cache.halfspaces(n, roots)) {
      geometry::HalfspaceQ row;
      row.f = h;
      row.c = -geometry::dot(h, bp.brick_vectors[fi]);
      rows.push_back(row);
    }
  }
  rows = geometry::prune_affine_rows(std::move(rows));

  std::vector<QVec> points = bp.brick_vectors;
  bp.poly = geometry::minkowski_vrep(std::move(points), bp.recession_rays);
  bp.poly.halfspaces = rows;

  // The two descriptions must denote the same set.
  for (const QVec& p : bp.brick_vectors)
    check(geometry::rows_satisfy_point(rows, p), "brick vectors satisfy the H-representation");
  for (const QVec& r : bp.recession_rays)
    check(geometry::rows_satisfy_ray(rows, r), "recession rays satisfy the H-representation");
  geometry::RationalPolyhedron vonly;
  vonly.dim = n;
  vonly.points = bp.poly.points;
  vonly.rays = bp.poly.rays;
  const geometry::RationalPolyhedron back = geometry::vrep_from_rows(n, rows);
  for (const QVec& p : back.points)
    check(geometry::polyhedron_contains(vonly, p), "H-representation points lie in the hull");
  for (const QVec& r : back.rays)
    check(geometry::in_conic_hull(bp.recession_rays, r),
          "H-representation rays lie in the recession cone");

  // Vertices are exactly the brick vectors of pointed facets.
  std::vector<QVec> vertices = geometry::vertices_of(bp.poly);
  geometry::sort_unique(vertices);
  std::vector<QVec> pointed;
  for (int fi : bp.vertex_facets) pointed.push_back(bp.brick_vectors[static_cast<size_t>(fi)]);
  geometry::sort_unique(pointed);
  check(vertices == pointed, "vertices are the brick vectors of pointed facets");
  return bp;
}

geometry::RationalCone local_cone_at(const BrickPolyhedron& bp, const Facet& I) {
  check(bp.instance != nullptr, "brick polyhedron must carry its instance");
  const Complex& sc = *bp.instance;
  const auto idx = sc.facet_index(I);
  if (!idx) throw PreconditionFailed("local cones are defined for facets");
  const int n = sc.system().rank();
  geometry::RationalCone cone =
      geometry::make_cone(n, facet_position_roots(sc, *idx));
  // Mutual membership against the geometric local cone at b(I).
  const QVec& b = bp.brick_vectors[static_cast<size_t>(*idx)];
  std::vector<QVec> geo;
  for (const QVec& p : bp.brick_vectors) {
    QVec d(p.size());
    bool zero = true;
    for (size_t i = 0; i < p.size(); ++i) {
      d[i] = p[i] - b[i];
      if (d[i] != 0) zero = false;
    }
    if (!zero) geo.push_back(geometry::canonical_ray(std::move(d)));
  }
  for (const QVec& r : bp.recession_rays) geo.push_back(r);
  for (const QVec& g : geo)
    check(geometry::cone_contains(cone, g), "local cone contains every feasible direction");
  for (const QVec& g : cone.generators)
    check(geometry::in_conic_hull(geo, g), "root configuration directions are feasible");
  return cone;
}

Functional chamber_functional(const CoxeterSystem& sys, Id z) {
  const IntMat m = sys.element(sys.inv(z)).matrix;
  Functional f(sys.rank());
  for (int j = 0; j < sys.rank(); ++j) {
    long long acc = 0;
    for (int i = 0; i < sys.rank(); ++i) acc += m(i, j);
    f[j] = static_cast<int32_t>(acc);
  }
  return f;
}

Facet kappa_facet(const Complex& sc, const GroupElement& z) {
  return f_antigreedy(sc, chamber_functional(sc.system(), sc.system().id_of(z))).facet;
}

KappaMap kappa(const Complex& sc) {
  const CoxeterSystem& sys = sc.system();
  KappaMap km;
  km.ideal = bruhat::weak_ideal(sys, sc.target(), sc.demazure());
  km.ideal_ids = bruhat::ideal_ids(sys, sc.target_id(), sc.demazure_id());
  std::set<int> hit;
  for (Id z : km.ideal_ids) {
    const AntigreedyTrace tr = f_antigreedy(sc, chamber_functional(sys, z));
    const auto idx = sc.facet_index(tr.facet);
    check(idx.has_value(), "kappa lands on a facet");
    km.facet_index.push_back(*idx);
    hit.insert(*idx);
    const Id zi = sys.inv(z);
    const std::vector<int16_t>& rid = sc.facet_root_ids()[static_cast<size_t>(*idx)];
    for (int p : tr.facet)
      check(sys.act_root(zi, rid[static_cast<size_t>(p) - 1]) > 0,
            "kappa facet roots lie in z(Phi+)");
  }
  std::set<int> pointed;
  const int n = sys.rank();
  for (size_t fi = 0; fi < sc.facets().size(); ++fi)
    if (geometry::is_pointed(geometry::make_cone(n, facet_position_roots(sc, static_cast<int>(fi)))))
      pointed.insert(static_cast<int>(fi));
  check(hit == pointed, "kappa surjects onto the facets with pointed root configuration");
  return km;
}

NormalFan normal_fan(const Complex& sc) {
  const CoxeterSystem& sys = sc.system();
  const int n = sys.rank();
  const KappaMap km = kappa(sc);
  NormalFan nf;
  nf.chambers_by_facet.assign(sc.facets().size(), {});
  std::vector<int> facet_of(sys.group_size(), -1);
  for (size_t i = 0; i < km.ideal_ids.size(); ++i) {
    facet_of[km.ideal_ids[i]] = km.facet_index[i];
    nf.chambers_by_facet[static_cast<size_t>(km.facet_index[i])].push_back(km.ideal_ids[i]);
  }

  // z(C) lies in the normal cone of b(I) iff every chamber ray z(omega_s)
  // pairs non-negatively with every root of the configuration of I.
  std::vector<std::vector<IntVec>> facet_roots(sc.facets().size());
  for (size_t fi = 0; fi < sc.facets().size(); ++fi)
    for (int p : sc.facets()[fi])
      facet_roots[fi].push_back(
          sys.root_of(sc.facet_root_ids()[fi][static_cast<size_t>(p) - 1]));
  auto chamber_in = [&](Id z, size_t fi) {
    const IntMat mz = sys.element(z).matrix;
    for (int s = 0; s < n; ++s) {
      const IntVec u = mz.act(sys.weights_scaled()[static_cast<size_t>(s)]);
      for (const IntVec& r : facet_roots[fi])
        if (sys.form(u, r) < 0) return false;
    }
    return true;
  };
  for (Id z = 0; z < sys.group_size(); ++z) {
    for (size_t fi = 0; fi < sc.facets().size(); ++fi) {
      const bool expect = facet_of[z] == static_cast<int>(fi);
      check(chamber_in(z, fi) == expect,
            "chambers lie in exactly the normal cone selected by kappa");
    }
    if (facet_of[z] < 0) nf.deleted_chambers.push_back(z);
  }

  // Each normal cone is exactly the union of its fiber's chambers: together
  // with the check above it suffices that every extreme ray of the dual of
  // cone(Roots(I)) lies in some chamber of the fiber.
  for (size_t fi = 0; fi < sc.facets().size(); ++fi) {
    if (nf.chambers_by_facet[fi].empty()) continue;
    std::vector<QVec> rows;
    for (const IntVec& r : facet_roots[fi]) {
      QVec row(static_cast<size_t>(n));
      for (int j = 0; j < n; ++j) {
        long long acc = 0;
        for (int i = 0; i < n; ++i) acc += sys.gram(i, j) * r[i];
        row[static_cast<size_t>(j)] = acc;
      }
      rows.push_back(std::move(row));
    }
    for (const QVec& ray : geometry::double_description_inverse(n, rows)) {
      const IntVec u = qvec_to_intvec(ray);
      bool inside = false;
      for (Id z : nf.chambers_by_facet[fi]) {
        const IntVec v = sys.element(sys.inv(z)).matrix.act(u);
        bool ok = true;
        for (int s = 0; s < n && ok; ++s) {
          long long acc = 0;
          for (int i = 0; i < n; ++i) acc += static_cast<long long>(v[i]) * sys.gram(i, s);
          if (acc < 0) ok = false;
        }
        if (ok) {
          inside = true;
          break;
        }
      }
      check(inside, "normal cone rays are covered by the fiber's chambers");
    }
  }
  return nf;
}

bool containment_check(const Complex& inst_w, const Complex& inst_ws) {
  if (&inst_w.system() != &inst_ws.system())
    throw PreconditionFailed("instances must share a Coxeter system");
  if (inst_w.word() != inst_ws.word()) throw PreconditionFailed("instances must share the word");
  const CoxeterSystem& sys = inst_w.system();
  const Id w = inst_w.target_id();
  const Id ws = inst_ws.target_id();
  bool cover = sys.len(ws) == sys.len(w) + 1;
  if (cover) {
    bool simple = false;
    for (int s = 0; s < sys.rank() && !simple; ++s)
      if (sys.right(w, s) == ws) simple = true;
    cover = simple;
  }
  if (!cover) throw PreconditionFailed("upper target must be ws with s simple and length up");
  if (inst_ws.empty())
    throw PreconditionFailed("upper target must lie below the Demazure product");
  const BrickPolyhedron lower = brick_polyhedron(inst_w);
  const BrickPolyhedron upper = brick_polyhedron(inst_ws);
  for (const QVec& p : upper.brick_vectors)
    if (!geometry::rows_satisfy_point(*lower.poly.halfspaces, p)) return false;
  for (const QVec& r : upper.recession_rays)
    if (!geometry::in_conic_hull(lower.recession_rays, r)) return false;
  return true;
}

}  // namespace brickforge::brick

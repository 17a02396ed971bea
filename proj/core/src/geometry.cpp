#include "brickforge/geometry.hpp"

#include <algorithm>
#include <cstdlib>

namespace brickforge::geometry {

using num::Integer;

int dimension_cap() {
  static const int cap = [] {
    if (const char* s = std::getenv("BRICKFORGE_MAX_DIM")) {
      int v = std::atoi(s);
      if (v >= 1 && v <= num::kMaxRank) return v;
      if (v > num::kMaxRank) return num::kMaxRank;
    }
    return 6;
  }();
  return cap;
}

void require_dim(int n) {
  if (n > dimension_cap())
    throw DimensionTooLarge("dimension " + std::to_string(n) + " exceeds cap " +
                            std::to_string(dimension_cap()) +
                            " (set BRICKFORGE_MAX_DIM to raise)");
}

Rational dot(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rational r = 0;
  for (size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

QVec negated(const QVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
  return r;
}

void canonicalize_ray(QVec& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer lcm_den = 1;
  for (const auto& x : v) lcm_den = lcm(lcm_den, denominator(x));
  Integer g = 0;
  std::vector<Integer> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    ints[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = gcd(g, abs(ints[i]));
  }
  if (g == 0) return;  // zero vector
  for (size_t i = 0; i < v.size(); ++i) v[i] = Rational(ints[i] / g);
}

QVec canonical_ray(QVec v) {
  canonicalize_ray(v);
  return v;
}

bool qvec_less(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

void sort_unique(std::vector<QVec>& vs) {
  std::sort(vs.begin(), vs.end(), qvec_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

int rank_rows(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  size_t n = rows[0].size();
  int rank = 0;
  for (size_t col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    size_t piv = static_cast<size_t>(rank);
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
    const QVec& prow = rows[static_cast<size_t>(rank)];
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col] / prow[col];
      for (size_t j = col; j < n; ++j) rows[r][j] -= f * prow[j];
    }
    ++rank;
  }
  return rank;
}

bool in_conic_hull(const std::vector<QVec>& generators, const QVec& v) {
  if (generators.empty()) return is_zero(v);
  size_t n = v.size();
  for (const auto& g : generators)
    if (g.size() != n) throw DimensionMismatch("in_conic_hull: generator length mismatch");
  std::vector<QVec> A(n, QVec(generators.size(), Rational(0)));
  for (size_t j = 0; j < generators.size(); ++j)
    for (size_t i = 0; i < n; ++i) A[i][j] = generators[j][i];
  return lp::feasible(A, v);
}

RationalCone make_cone(int dim, std::vector<QVec> generators) {
  RationalCone c;
  c.dim = dim;
  for (auto& g : generators) {
    if (static_cast<int>(g.size()) != dim) throw DimensionMismatch("make_cone: generator length mismatch");
    canonicalize_ray(g);
    if (!is_zero(g)) c.generators.push_back(std::move(g));
  }
  sort_unique(c.generators);
  return c;
}

bool cone_contains(const RationalCone& cone, const QVec& v) {
  if (static_cast<int>(v.size()) != cone.dim) throw DimensionMismatch("cone_contains: vector length mismatch");
  if (cone.halfspaces) {
    for (const auto& f : *cone.halfspaces)
      if (dot(f, v) < 0) return false;
    return true;
  }
  return in_conic_hull(cone.generators, v);
}

// ---------------------------------------------------------------------------
// Incremental double description (Motzkin).
// ---------------------------------------------------------------------------

namespace {

struct RayRec {
  QVec v;
  uint64_t tight = 0;  // processed rows satisfied with equality
};

// RREF over Q with primitive integer rows; canonical basis of a subspace.
std::vector<QVec> reduced_basis(std::vector<QVec> rows) {
  size_t nrows = rows.size();
  if (nrows == 0) return rows;
  size_t n = rows[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < nrows; ++col) {
    size_t piv = rank;
    while (piv < nrows && rows[piv][col] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(rows[rank], rows[piv]);
    Rational p = rows[rank][col];
    for (size_t j = 0; j < n; ++j) rows[rank][j] /= p;
    for (size_t r = 0; r < nrows; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (size_t j = 0; j < n; ++j) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  rows.resize(rank);
  for (auto& r : rows) canonicalize_ray(r);
  return rows;
}

}  // namespace

RayEnumeration enumerate_rays(int dim, const std::vector<QVec>& input_rows) {
  RayEnumeration out;
  if (dim == 0) return out;

  std::vector<QVec> rows;
  rows.reserve(input_rows.size());
  for (QVec r : input_rows) {
    if (static_cast<int>(r.size()) != dim) throw DimensionMismatch("enumerate_rays: row length mismatch");
    canonicalize_ray(r);
    if (!is_zero(r)) rows.push_back(std::move(r));
  }
  sort_unique(rows);
  if (rows.size() > 64) rows = prune_rows(std::move(rows));
  check(rows.size() <= 64, "constraint row budget (64) after pruning");

  std::vector<QVec> lin;
  for (int i = 0; i < dim; ++i) {
    QVec e(static_cast<size_t>(dim), Rational(0));
    e[static_cast<size_t>(i)] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<RayRec> rays;

  for (size_t t = 0; t < rows.size(); ++t) {
    const QVec& a = rows[t];
    uint64_t bit = uint64_t{1} << t;
    uint64_t prev_mask = bit - 1;

    // If the lineality space leaves the hyperplane of a, pivot: one basis
    // vector becomes a ray, the rest get projected into a's hyperplane.
    // Processed rows vanish on the lineality space, so tight sets carry over.
    size_t piv = lin.size();
    for (size_t i = 0; i < lin.size(); ++i) {
      if (dot(a, lin[i]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < lin.size()) {
      QVec l0 = lin[piv];
      Rational al0 = dot(a, l0);
      if (al0 < 0) {
        l0 = negated(l0);
        al0 = -al0;
      }
      std::vector<QVec> new_lin;
      for (size_t i = 0; i < lin.size(); ++i) {
        if (i == piv) continue;
        Rational f = dot(a, lin[i]) / al0;
        QVec w(lin[i]);
        for (size_t j = 0; j < w.size(); ++j) w[j] -= f * l0[j];
        canonicalize_ray(w);
        if (!is_zero(w)) new_lin.push_back(std::move(w));
      }
      lin = std::move(new_lin);
      for (auto& r : rays) {
        Rational f = dot(a, r.v) / al0;
        for (size_t j = 0; j < r.v.size(); ++j) r.v[j] -= f * l0[j];
        canonicalize_ray(r.v);
        check(!is_zero(r.v), "ray does not collapse under lineality pivot");
        r.tight |= bit;  // a·r == 0 after projection
      }
      RayRec r0;
      r0.v = canonical_ray(std::move(l0));
      r0.tight = prev_mask;
      rays.push_back(std::move(r0));
      continue;
    }

    // Lineality is inside the hyperplane: split rays by sign.
    std::vector<size_t> pos, neg;
    std::vector<Rational> val(rays.size());
    for (size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0)
        pos.push_back(i);
      else if (val[i] < 0)
        neg.push_back(i);
      else
        rays[i].tight |= bit;
    }
    if (neg.empty()) continue;

    std::vector<RayRec> next;
    for (size_t i = 0; i < rays.size(); ++i)
      if (val[i] >= 0) next.push_back(rays[i]);
    for (size_t pi : pos) {
      for (size_t ni : neg) {
        uint64_t common = rays[pi].tight & rays[ni].tight;
        bool adjacent = true;
        for (size_t k = 0; k < rays.size(); ++k) {
          if (k == pi || k == ni) continue;
          if ((common & ~rays[k].tight) == 0) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        RayRec nr;
        nr.v.resize(static_cast<size_t>(dim));
        for (int j = 0; j < dim; ++j)
          nr.v[static_cast<size_t>(j)] =
              val[pi] * rays[ni].v[static_cast<size_t>(j)] - val[ni] * rays[pi].v[static_cast<size_t>(j)];
        canonicalize_ray(nr.v);
        check(!is_zero(nr.v), "Motzkin combination is non-zero");
        nr.tight = common | bit;
        next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
  }

  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  sort_unique(out.rays);
  out.lineality = reduced_basis(std::move(lin));

  // The enumeration is exact; verify the defining inequalities outright.
  for (const auto& r : out.rays)
    for (const auto& a : rows) check(dot(a, r) >= 0, "enumerated ray satisfies rows");
  for (const auto& l : out.lineality)
    for (const auto& a : rows) check(dot(a, l) == 0, "lineality vanishes on rows");
  return out;
}

std::vector<QVec> prune_rows(std::vector<QVec> rows) {
  for (auto& r : rows) canonicalize_ray(r);
  sort_unique(rows);
  rows.erase(std::remove_if(rows.begin(), rows.end(), [](const QVec& r) { return is_zero(r); }),
             rows.end());
  for (size_t i = 0; i < rows.size();) {
    std::vector<QVec> others;
    others.reserve(rows.size() - 1);
    for (size_t j = 0; j < rows.size(); ++j)
      if (j != i) others.push_back(rows[j]);
    if (in_conic_hull(others, rows[i]))
      rows.erase(rows.begin() + static_cast<long>(i));
    else
      ++i;
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin double description (generators -> minimal H-rep).
// ---------------------------------------------------------------------------

namespace {

// Eliminates variable `var` from the homogeneous system rows >= 0.
std::vector<QVec> fm_eliminate(const std::vector<QVec>& rows, size_t var) {
  std::vector<QVec> out;
  std::vector<size_t> pos, neg;
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i][var] > 0)
      pos.push_back(i);
    else if (rows[i][var] < 0)
      neg.push_back(i);
    else
      out.push_back(rows[i]);
  }
  for (size_t pi : pos) {
    for (size_t ni : neg) {
      QVec combo(rows[pi].size());
      Rational cp = rows[pi][var];
      Rational cn = -rows[ni][var];
      for (size_t j = 0; j < combo.size(); ++j) combo[j] = cn * rows[pi][j] + cp * rows[ni][j];
      canonicalize_ray(combo);
      if (!is_zero(combo)) out.push_back(std::move(combo));
    }
  }
  sort_unique(out);
  return out;
}

}  // namespace

std::vector<QVec> double_description(const std::vector<QVec>& generators) {
  check(!generators.empty(), "double_description needs at least one generator to fix the dimension");
  int dim = static_cast<int>(generators[0].size());
  require_dim(dim);
  size_t k = generators.size();
  size_t total = static_cast<size_t>(dim) + k;

  // Lifted system over (x, lambda):  x = sum lambda_j g_j,  lambda >= 0,
  // written as inequality rows >= 0.
  std::vector<QVec> rows;
  for (int i = 0; i < dim; ++i) {
    QVec row(total, Rational(0));
    row[static_cast<size_t>(i)] = 1;
    for (size_t j = 0; j < k; ++j) {
      if (static_cast<int>(generators[j].size()) != dim)
        throw DimensionMismatch("double_description: generator length mismatch");
      row[static_cast<size_t>(dim) + j] = -generators[j][static_cast<size_t>(i)];
    }
    rows.push_back(row);
    rows.push_back(negated(row));
  }
  for (size_t j = 0; j < k; ++j) {
    QVec row(total, Rational(0));
    row[static_cast<size_t>(dim) + j] = 1;
    rows.push_back(std::move(row));
  }

  std::vector<size_t> remaining;
  for (size_t j = 0; j < k; ++j) remaining.push_back(static_cast<size_t>(dim) + j);
  while (!remaining.empty()) {
    // Cheapest elimination first: minimize |pos| * |neg|.
    size_t best = 0;
    long long best_cost = -1;
    for (size_t idx = 0; idx < remaining.size(); ++idx) {
      long long p = 0, n = 0;
      for (const auto& r : rows) {
        if (r[remaining[idx]] > 0)
          ++p;
        else if (r[remaining[idx]] < 0)
          ++n;
      }
      long long cost = p * n;
      if (best_cost < 0 || cost < best_cost) {
        best_cost = cost;
        best = idx;
      }
    }
    size_t var = remaining[best];
    remaining.erase(remaining.begin() + static_cast<long>(best));
    rows = fm_eliminate(rows, var);
    if (rows.size() > 24) rows = prune_rows(std::move(rows));
  }

  std::vector<QVec> result;
  for (const auto& r : rows) {
    for (size_t j = static_cast<size_t>(dim); j < total; ++j)
      check(r[j] == 0, "eliminated variables have zero coefficients");
    result.emplace_back(r.begin(), r.begin() + dim);
  }
  result = prune_rows(std::move(result));
  sort_unique(result);
  return result;
}

std::vector<QVec> double_description_inverse(int dim, const std::vector<QVec>& halfspaces) {
  require_dim(dim);
  RayEnumeration e = enumerate_rays(dim, halfspaces);
  std::vector<QVec> gens = e.rays;
  for (const auto& l : e.lineality) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  sort_unique(gens);
  return gens;
}

namespace {

// H-rep through the dual cone: rays/lineality of { f : f·g >= 0 for all g }.
std::vector<QVec> hrep_via_dual(int dim, const std::vector<QVec>& generators) {
  RayEnumeration e = enumerate_rays(dim, generators);
  std::vector<QVec> rows = e.rays;
  for (const auto& l : e.lineality) {
    rows.push_back(l);
    rows.push_back(negated(l));
  }
  sort_unique(rows);
  return rows;
}

}  // namespace

const std::vector<QVec>& HrepCache::halfspaces(int dim, const std::vector<QVec>& generators) {
  std::vector<QVec> key;
  key.reserve(generators.size());
  for (const auto& g : generators) {
    QVec c = canonical_ray(g);
    if (!is_zero(c)) key.push_back(std::move(c));
  }
  sort_unique(key);
  auto full_key = std::make_pair(dim, std::move(key));
  auto it = cache_.find(full_key);
  if (it == cache_.end())
    it = cache_.emplace(full_key, hrep_via_dual(dim, full_key.second)).first;
  return it->second;
}

RationalCone cone_intersect(const std::vector<RationalCone>& cones) {
  check(!cones.empty(), "cone_intersect needs at least one cone");
  int dim = cones[0].dim;
  require_dim(dim);
  std::vector<QVec> rows;
  for (const auto& c : cones) {
    if (c.dim != dim) throw DimensionMismatch("cone_intersect: mixed dimensions");
    std::vector<QVec> h = c.halfspaces ? *c.halfspaces : hrep_via_dual(dim, c.generators);
    rows.insert(rows.end(), h.begin(), h.end());
  }
  for (auto& r : rows) canonicalize_ray(r);
  sort_unique(rows);
  if (rows.size() > 64) rows = prune_rows(std::move(rows));

  RayEnumeration e = enumerate_rays(dim, rows);
  RationalCone out;
  out.dim = dim;
  out.generators = e.rays;
  for (const auto& l : e.lineality) {
    out.generators.push_back(l);
    out.generators.push_back(negated(l));
  }
  sort_unique(out.generators);
  out.halfspaces = std::move(rows);
  return out;
}

bool cone_equal(const RationalCone& a, const RationalCone& b) {
  if (a.dim != b.dim) throw DimensionMismatch("cone_equal: mixed dimensions");
  for (const auto& g : a.generators)
    if (!cone_contains(b, g)) return false;
  for (const auto& g : b.generators)
    if (!cone_contains(a, g)) return false;
  return true;
}

bool is_pointed(const RationalCone& cone) {
  std::vector<QVec> h = cone.halfspaces ? *cone.halfspaces : hrep_via_dual(cone.dim, cone.generators);
  return rank_rows(std::move(h)) == cone.dim;
}

// ---------------------------------------------------------------------------
// Polyhedra.
// ---------------------------------------------------------------------------

RationalPolyhedron minkowski_vrep(std::vector<QVec> points, std::vector<QVec> rays) {
  RationalPolyhedron p;
  check(!points.empty() || !rays.empty(), "minkowski_vrep: empty V-representation");
  p.dim = static_cast<int>(points.empty() ? rays[0].size() : points[0].size());
  for (const auto& pt : points)
    if (static_cast<int>(pt.size()) != p.dim) throw DimensionMismatch("minkowski_vrep: point length mismatch");
  sort_unique(points);
  p.points = std::move(points);
  std::vector<QVec> rr;
  for (auto& r : rays) {
    if (static_cast<int>(r.size()) != p.dim) throw DimensionMismatch("minkowski_vrep: ray length mismatch");
    canonicalize_ray(r);
    if (!is_zero(r)) rr.push_back(std::move(r));
  }
  sort_unique(rr);
  p.rays = std::move(rr);
  return p;
}

bool rows_satisfy_point(const std::vector<HalfspaceQ>& rows, const QVec& p) {
  for (const auto& h : rows)
    if (dot(h.f, p) + h.c < 0) return false;
  return true;
}

bool rows_satisfy_ray(const std::vector<HalfspaceQ>& rows, const QVec& r) {
  for (const auto& h : rows)
    if (dot(h.f, r) < 0) return false;
  return true;
}

bool polyhedron_contains(const RationalPolyhedron& p, const QVec& v) {
  if (static_cast<int>(v.size()) != p.dim) throw DimensionMismatch("polyhedron_contains: vector length mismatch");
  if (p.halfspaces) return rows_satisfy_point(*p.halfspaces, v);
  // Convex-conic feasibility: v = sum mu_i p_i + sum lambda_j r_j,
  // mu, lambda >= 0, sum mu = 1.
  size_t np = p.points.size(), nr = p.rays.size();
  if (np == 0) return false;
  std::vector<QVec> A(static_cast<size_t>(p.dim) + 1, QVec(np + nr, Rational(0)));
  QVec b(static_cast<size_t>(p.dim) + 1, Rational(0));
  for (size_t j = 0; j < np; ++j) {
    for (int i = 0; i < p.dim; ++i) A[static_cast<size_t>(i)][j] = p.points[j][static_cast<size_t>(i)];
    A[static_cast<size_t>(p.dim)][j] = 1;
  }
  for (size_t j = 0; j < nr; ++j)
    for (int i = 0; i < p.dim; ++i) A[static_cast<size_t>(i)][np + j] = p.rays[j][static_cast<size_t>(i)];
  for (int i = 0; i < p.dim; ++i) b[static_cast<size_t>(i)] = v[static_cast<size_t>(i)];
  b[static_cast<size_t>(p.dim)] = 1;
  return lp::feasible(A, b);
}

std::vector<QVec> vertices_of(const RationalPolyhedron& p) {
  std::vector<QVec> pts = p.points;
  sort_unique(pts);
  std::vector<QVec> verts;
  for (const auto& v : pts) {
    std::vector<QVec> dirs;
    for (const auto& q : pts) {
      if (q == v) continue;
      QVec d(q);
      for (size_t i = 0; i < d.size(); ++i) d[i] -= v[i];
      dirs.push_back(std::move(d));
    }
    for (const auto& r : p.rays) dirs.push_back(r);
    if (is_pointed(make_cone(p.dim, std::move(dirs)))) verts.push_back(v);
  }
  return verts;
}

std::vector<HalfspaceQ> prune_affine_rows(std::vector<HalfspaceQ> rows) {
  // Dedup on the homogenized covector (f, c).
  std::vector<QVec> hom;
  for (const auto& h : rows) {
    QVec v = h.f;
    v.push_back(h.c);
    canonicalize_ray(v);
    if (!is_zero(v)) hom.push_back(std::move(v));
  }
  sort_unique(hom);
  // Farkas for affine rows of a non-empty polyhedron: (f,c) is implied iff it
  // is a conic combination of the other rows and the trivial row (0,1).
  for (size_t i = 0; i < hom.size();) {
    std::vector<QVec> others;
    for (size_t j = 0; j < hom.size(); ++j)
      if (j != i) others.push_back(hom[j]);
    QVec trivial(hom[i].size(), Rational(0));
    trivial.back() = 1;
    others.push_back(std::move(trivial));
    if (in_conic_hull(others, hom[i]))
      hom.erase(hom.begin() + static_cast<long>(i));
    else
      ++i;
  }
  std::vector<HalfspaceQ> out;
  for (auto& v : hom) {
    HalfspaceQ h;
    h.c = v.back();
    v.pop_back();
    h.f = std::move(v);
    out.push_back(std::move(h));
  }
  return out;
}

RationalPolyhedron vrep_from_rows(int dim, const std::vector<HalfspaceQ>& rows) {
  require_dim(dim);
  std::vector<QVec> hom;
  for (const auto& h : rows) {
    QVec v = h.f;
    v.push_back(h.c);
    hom.push_back(std::move(v));
  }
  QVec tnn(static_cast<size_t>(dim) + 1, Rational(0));
  tnn.back() = 1;
  hom.push_back(std::move(tnn));

  RayEnumeration e = enumerate_rays(dim + 1, hom);
  RationalPolyhedron p;
  p.dim = dim;
  for (const auto& r : e.rays) {
    Rational t = r.back();
    check(t >= 0, "homogenization coordinate is non-negative");
    QVec x(r.begin(), r.end() - 1);
    if (t > 0) {
      for (auto& c : x) c /= t;
      p.points.push_back(std::move(x));
    } else {
      p.rays.push_back(canonical_ray(std::move(x)));
    }
  }
  for (const auto& l : e.lineality) {
    check(l.back() == 0, "lineality stays in the recession part");
    QVec x(l.begin(), l.end() - 1);
    p.rays.push_back(canonical_ray(x));
    p.rays.push_back(canonical_ray(negated(x)));
  }
  sort_unique(p.points);
  sort_unique(p.rays);
  return p;
}

}  // namespace brickforge::geometry

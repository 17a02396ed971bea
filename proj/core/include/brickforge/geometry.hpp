#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brickforge/lp.hpp"
#include "brickforge/numeric.hpp"

namespace brickforge::geometry {

using num::QVec;
using num::Rational;

// Dimension cap for double description work.  Default 6, overridable through
// the BRICKFORGE_MAX_DIM environment variable (read once per process).
int dimension_cap();
void require_dim(int n);

Rational dot(const QVec& a, const QVec& b);
bool is_zero(const QVec& v);
QVec negated(const QVec& v);

// Scales v by a positive rational so that its entries are coprime integers.
// Direction is preserved; the zero vector is left alone.
void canonicalize_ray(QVec& v);
QVec canonical_ray(QVec v);

// Exact rank of a list of rational row vectors.
int rank_rows(std::vector<QVec> rows);

// A finitely generated cone.  `generators` always describes the cone;
// `halfspaces` is an optional cached H-representation (covectors f with
// cone = { v : f·v >= 0 for all f }).  Both descriptions, when present,
// denote the same set.
struct RationalCone {
  int dim = 0;
  std::vector<QVec> generators;
  std::optional<std::vector<QVec>> halfspaces;
};

RationalCone make_cone(int dim, std::vector<QVec> generators);

// v in cone(generators), decided by exact phase-1 simplex (or by evaluating
// the cached halfspaces when present).
bool cone_contains(const RationalCone& cone, const QVec& v);
bool in_conic_hull(const std::vector<QVec>& generators, const QVec& v);

// Minimal H-representation of cone(generators) by Fourier-Motzkin elimination
// of the multiplier variables, with exact-LP redundancy pruning between
// elimination steps.  Implicit equalities come out as +/- covector pairs.
std::vector<QVec> double_description(const std::vector<QVec>& generators);

// Generators of { v : f·v >= 0 } by incremental double description
// (Motzkin).  Lineality directions are returned as +/- ray pairs, so the
// output is a plain generator list.
std::vector<QVec> double_description_inverse(int dim, const std::vector<QVec>& halfspaces);

// Incremental double description: extreme rays and a lineality basis of
// { x : row·x >= 0 }.  Requires at most 64 distinct rows after dedup.
struct RayEnumeration {
  std::vector<QVec> rays;
  std::vector<QVec> lineality;
};
RayEnumeration enumerate_rays(int dim, const std::vector<QVec>& rows);

// Removes rows that are conic combinations of the remaining ones.
std::vector<QVec> prune_rows(std::vector<QVec> rows);

RationalCone cone_intersect(const std::vector<RationalCone>& cones);
bool cone_equal(const RationalCone& a, const RationalCone& b);

// Pointed = contains no line = H-rep covectors span the full dual space.
bool is_pointed(const RationalCone& cone);

// Computes (and caches) an H-representation for a cone given by generators.
// The cache key is the canonicalized, sorted generator list.
class HrepCache {
 public:
  const std::vector<QVec>& halfspaces(int dim, const std::vector<QVec>& generators);

 private:
  std::map<std::pair<int, std::vector<QVec>>, std::vector<QVec>> cache_;
};

// Affine halfspace f·x + c >= 0.
struct HalfspaceQ {
  QVec f;
  Rational c = 0;
};

// P = conv(points) + cone(rays); `halfspaces`, when present, is an exact
// H-representation of the same set.
struct RationalPolyhedron {
  int dim = 0;
  std::vector<QVec> points;
  std::vector<QVec> rays;
  std::optional<std::vector<HalfspaceQ>> halfspaces;
};

RationalPolyhedron minkowski_vrep(std::vector<QVec> points, std::vector<QVec> rays);
bool polyhedron_contains(const RationalPolyhedron& p, const QVec& v);

// Points of the V-representation that are zero-dimensional faces.  A point is
// a vertex iff its cone of feasible directions, cone{p' - p} + cone(rays),
// is pointed.
std::vector<QVec> vertices_of(const RationalPolyhedron& p);

// Drops affine rows implied by the others (homogenized Farkas certificate);
// assumes the described polyhedron is non-empty.
std::vector<HalfspaceQ> prune_affine_rows(std::vector<HalfspaceQ> rows);

// V-representation of { x : f·x + c >= 0 } via the homogenization
// { (x,t) : f·x + c t >= 0, t >= 0 }.  Lineality shows up as +/- ray pairs.
RationalPolyhedron vrep_from_rows(int dim, const std::vector<HalfspaceQ>& rows);

bool rows_satisfy_point(const std::vector<HalfspaceQ>& rows, const QVec& p);
bool rows_satisfy_ray(const std::vector<HalfspaceQ>& rows, const QVec& r);

// Deterministic ordering helpers for canonical output.
bool qvec_less(const QVec& a, const QVec& b);
void sort_unique(std::vector<QVec>& vs);

}  // namespace brickforge::geometry

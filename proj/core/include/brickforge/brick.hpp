#pragma once

#include <vector>

#include "brickforge/bruhat.hpp"
#include "brickforge/geometry.hpp"
#include "brickforge/subword.hpp"

namespace brickforge::brick {

using coxeter::CoxeterSystem;
using coxeter::GroupElement;
using coxeter::Root;
using subword::Complex;
using subword::Facet;

// Linear functional on the root space, written in the basis dual to the
// simple roots: f(sum c_s alpha_s) = sum f_s c_s.
using Functional = num::IntVec;

long long apply(const Functional& f, const Root& r);

// f is admissible for SC(Q,w) when it is non-negative on E+(w, Dem(Q)).
bool admissible(const Complex& sc, const Functional& f);

// One step of the antigreedy scan: at position k the root beta = w_{k-1}(alpha_{s_k})
// is inspected and exactly one of six rules fires; rules 1-3 put k into the
// facet, rules 4-6 extend the prefix w_{k-1} by s_k.
struct StepRecord {
  int position = 0;
  Root beta;
  int rule = 0;
  GroupElement prefix;
  Facet partial;
};

struct AntigreedyTrace {
  Facet facet;
  std::vector<StepRecord> steps;
};

// The f-antigreedy facet: the unique facet I with f >= 0 on Roots(I) whose
// zero-set positive roots all lie in E+(w, Dem(Q)).
AntigreedyTrace f_antigreedy(const Complex& sc, const Functional& f);

// Facets of the subcomplex SC_f: those I with f(r(I,i)) >= 0 for all i in I.
std::vector<int> sc_f_facet_indices(const Complex& sc, const Functional& f);
std::vector<Facet> sc_f_facets(const Complex& sc, const Functional& f);

// b(I) = -sum_{k=1..m} w(I,k), in root-basis coordinates.
geometry::QVec brick_vector(const Complex& sc, const Facet& I);

// B(Q,w) = conv{ b(I) } + cone(E+(w, Dem(Q))), with an exact H-representation
// obtained as the intersection of the translated cones b(I) + cone(Roots(I)).
struct BrickPolyhedron {
  const Complex* instance = nullptr;
  std::vector<geometry::QVec> brick_vectors;  // parallel to instance->facets()
  std::vector<int> vertex_facets;             // facets with pointed root configuration
  std::vector<geometry::QVec> recession_rays; // E+(w, Dem(Q))
  geometry::RationalPolyhedron poly;          // points, rays and halfspaces
  bool polytopal = false;                     // w == Dem(Q)
};
BrickPolyhedron brick_polyhedron(const Complex& sc);

// cone(Roots(I)); checked against the geometric local cone
// cone{ p - b(I) : p a brick vector } + recession rays.
geometry::RationalCone local_cone_at(const BrickPolyhedron& bp, const Facet& I);

// f_z is positive on z(Phi+) and negative on z(Phi-): the all-ones covector
// pulled back through z^{-1}.
Functional chamber_functional(const CoxeterSystem& sys, CoxeterSystem::Id z);

// kappa assigns to each z in the weak ideal I(w, Dem(Q)) the f_z-antigreedy
// facet; it surjects onto the facets with pointed root configuration.
struct KappaMap {
  bruhat::WeakIdeal ideal;
  std::vector<CoxeterSystem::Id> ideal_ids;
  std::vector<int> facet_index;  // per ideal member, index into facets()
};
KappaMap kappa(const Complex& sc);
Facet kappa_facet(const Complex& sc, const GroupElement& z);

// Normal fan of the brick polyhedron as a coarsening of the Coxeter fan: the
// normal cone of the vertex b(I) is the union of the chambers z(C) over the
// kappa-fiber of I; chambers outside the weak ideal are deleted.
struct NormalFan {
  std::vector<std::vector<CoxeterSystem::Id>> chambers_by_facet;
  std::vector<CoxeterSystem::Id> deleted_chambers;
};
NormalFan normal_fan(const Complex& sc);

// Whether B(Q, ws) is contained in B(Q, w) for a cover w < ws by a simple
// right factor.  Always true by the containment theorem; exposed as a check.
bool containment_check(const Complex& inst_w, const Complex& inst_ws);

}  // namespace brickforge::brick

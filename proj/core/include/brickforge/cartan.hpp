#pragma once

#include <string>
#include <vector>

#include "brickforge/numeric.hpp"

namespace brickforge::coxeter {

// Integer Cartan matrix a[s][t] of a finite crystallographic Coxeter system.
// Convention: the simple reflection s acts by s(alpha_t) = alpha_t - a[s][t] alpha_s.
struct CartanMatrix {
  int rank = 0;
  std::vector<std::vector<int>> a;
};

// Named presets used throughout the documentation and tests.  "A1xA1" is a
// rank-3 diagonal matrix: its generators all commute, and words over the
// letters {1,3} give two commuting generators with the naming used in the
// worked examples.
CartanMatrix preset_cartan(const std::string& name);
std::vector<std::string> preset_names();

// Throws NotCrystallographic when the integer matrix fails the defining
// conditions, NotFinite when the symmetrized form is not positive definite,
// DimensionTooLarge when the rank exceeds the engine cap.
void validate_cartan(const CartanMatrix& c);

// Minimal positive integer vector d with d[s] a[s][t] = d[t] a[t][s].
std::vector<long long> minimal_symmetrizer(const CartanMatrix& c);

}  // namespace brickforge::coxeter

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brickforge::verify {

// Sweep shared by the structural checks: for every listed preset system, every
// word over its generators up to the length cap, and every admissible target
// below the Demazure product, the checks run their assertions exhaustively.
// Functionals and rank-3 triples are seeded, so a given config always visits
// the same cases in the same order.
struct SweepConfig {
  std::vector<std::string> systems{"A2", "B2", "A3", "B3"};
  int max_word_length = 0;      // 0 = default cap: 7 for rank <= 2, 5 above
  int functional_samples = 50;  // admissible functionals per instance
  uint64_t seed = 1;
  long long triple_samples = 10000;  // sampled (x, y, s) triples for rank >= 3
  // Canonical words restricting the sweep targets; empty = every element
  // below the Demazure product.  Words must parse in every listed system.
  std::vector<std::string> targets;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  long long cases = 0;   // assertions exercised before success or first failure
  std::string failure;   // first counterexample; empty when passed
};

// Registered check names, in canonical order:
//   cone_equality          intersection of facet cones == cone(E+)
//   antigreedy_uniqueness  the scan output is the only facet passing (b),(c)
//   sc_f_components        SC_f is one flip component and a smaller complex
//   brick_polyhedron       V=H, vertex criterion, flips, containment, fan
//   dyer                   interval cone lemmas on pairs and triples
//   oracle_facets          flip-graph enumeration vs subset brute force
//   oracle_bruhat          Bruhat order vs subword-property dynamic program
const std::vector<std::string>& check_names();
bool is_check_name(const std::string& name);

CheckOutcome run_check(const std::string& name, const SweepConfig& cfg);
std::vector<CheckOutcome> run_checks(const std::vector<std::string>& names,
                                     const SweepConfig& cfg);

}  // namespace brickforge::verify

#include "brickforge/cartan.hpp"

#include <numeric>

namespace brickforge::coxeter {

using num::Rational;

CartanMatrix preset_cartan(const std::string& name) {
  if (name == "A2") return {2, {{2, -1}, {-1, 2}}};
  if (name == "B2") return {2, {{2, -1}, {-2, 2}}};
  if (name == "A3") return {3, {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}};
  if (name == "B3") return {3, {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}};
  if (name == "A1xA1") return {3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}};
  throw UsageError("unknown system preset '" + name + "' (known: A2, B2, A3, B3, A1xA1)");
}

std::vector<std::string> preset_names() { return {"A2", "B2", "A3", "B3", "A1xA1"}; }

void validate_cartan(const CartanMatrix& c) {
  if (c.rank < 1) throw NotCrystallographic("rank must be positive");
  if (c.rank > num::kMaxRank)
    throw DimensionTooLarge("rank " + std::to_string(c.rank) + " exceeds engine cap " +
                            std::to_string(num::kMaxRank));
  if (static_cast<int>(c.a.size()) != c.rank) throw NotCrystallographic("matrix has wrong row count");
  for (int s = 0; s < c.rank; ++s) {
    if (static_cast<int>(c.a[s].size()) != c.rank) throw NotCrystallographic("matrix row has wrong length");
    if (c.a[s][s] != 2) throw NotCrystallographic("diagonal entries must equal 2");
    for (int t = 0; t < c.rank; ++t) {
      if (s == t) continue;
      if (c.a[s][t] > 0) throw NotCrystallographic("off-diagonal entries must be non-positive");
      if ((c.a[s][t] == 0) != (c.a[t][s] == 0))
        throw NotCrystallographic("zero pattern must be symmetric");
      int prod = c.a[s][t] * c.a[t][s];
      if (prod > 3) throw NotCrystallographic("a[s][t] a[t][s] must lie in {0,1,2,3}");
    }
  }
  // Finiteness: the symmetrized matrix d[s] a[s][t] must be positive definite.
  std::vector<long long> d = minimal_symmetrizer(c);
  std::vector<std::vector<Rational>> m(static_cast<size_t>(c.rank),
                                       std::vector<Rational>(static_cast<size_t>(c.rank)));
  for (int s = 0; s < c.rank; ++s)
    for (int t = 0; t < c.rank; ++t) m[s][t] = Rational(d[s]) * c.a[s][t];
  // Leading principal minors via fraction-free forward elimination.
  for (int k = 0; k < c.rank; ++k) {
    Rational minor = 1;
    auto mm = m;
    for (int col = 0; col <= k; ++col) {
      if (mm[col][col] == 0) throw NotFinite("symmetrized form is not positive definite");
      minor *= mm[col][col];
      for (int r = col + 1; r <= k; ++r) {
        Rational f = mm[r][col] / mm[col][col];
        for (int j = col; j <= k; ++j) mm[r][j] -= f * mm[col][j];
      }
    }
    if (minor <= 0) throw NotFinite("symmetrized form is not positive definite");
  }
}

std::vector<long long> minimal_symmetrizer(const CartanMatrix& c) {
  int n = c.rank;
  std::vector<Rational> d(static_cast<size_t>(n), Rational(0));
  // Propagate the ratio d[t]/d[s] = a[s][t]/a[t][s] across each connected
  // component of the Coxeter diagram, then clear denominators per component.
  for (int start = 0; start < n; ++start) {
    if (d[static_cast<size_t>(start)] != 0) continue;
    std::vector<int> comp{start};
    d[static_cast<size_t>(start)] = 1;
    for (size_t q = 0; q < comp.size(); ++q) {
      int s = comp[q];
      for (int t = 0; t < n; ++t) {
        if (t == s || c.a[s][t] == 0) continue;
        if (c.a[t][s] == 0) throw NotCrystallographic("zero pattern must be symmetric");
        Rational want = d[static_cast<size_t>(s)] * c.a[s][t] / c.a[t][s];
        if (d[static_cast<size_t>(t)] == 0) {
          d[static_cast<size_t>(t)] = want;
          comp.push_back(t);
        } else if (d[static_cast<size_t>(t)] != want) {
          throw NotCrystallographic("matrix admits no symmetrizer");
        }
      }
    }
    num::Integer lcm_den = 1;
    for (int s : comp)
      lcm_den = lcm(lcm_den, boost::multiprecision::denominator(d[static_cast<size_t>(s)]));
    num::Integer g = 0;
    for (int s : comp) {
      d[static_cast<size_t>(s)] *= Rational(lcm_den);
      g = gcd(g, boost::multiprecision::numerator(d[static_cast<size_t>(s)]));
    }
    for (int s : comp) d[static_cast<size_t>(s)] /= Rational(g);
  }
  std::vector<long long> out(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    check(boost::multiprecision::denominator(d[static_cast<size_t>(s)]) == 1 &&
              d[static_cast<size_t>(s)] > 0,
          "symmetrizer entries are positive integers");
    out[static_cast<size_t>(s)] =
        static_cast<long long>(boost::multiprecision::numerator(d[static_cast<size_t>(s)]));
  }
  return out;
}

}  // namespace brickforge::coxeter

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "brickforge/errors.hpp"

namespace brickforge::num {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;
using QVec = std::vector<Rational>;

// Rank cap for the fixed-size integer vector/matrix types used on hot paths.
inline constexpr int kMaxRank = 8;

// Dense integer vector of dimension n <= kMaxRank.  Root and scaled-weight
// coordinates stay well inside int32 for every finite crystallographic type
// this engine accepts.
struct IntVec {
  std::array<int32_t, kMaxRank> c{};
  int8_t n = 0;

  IntVec() = default;
  explicit IntVec(int dim) : n(static_cast<int8_t>(dim)) {
    if (dim < 0 || dim > kMaxRank) throw DimensionTooLarge("vector dimension exceeds engine cap");
  }

  int dim() const { return n; }
  int32_t operator[](int i) const { return c[static_cast<size_t>(i)]; }
  int32_t& operator[](int i) { return c[static_cast<size_t>(i)]; }

  bool operator==(const IntVec& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      if (c[i] != o.c[i]) return false;
    return true;
  }
  bool operator!=(const IntVec& o) const { return !(*this == o); }
  // Lexicographic; used for the canonical (height, lex) ordering of roots.
  bool operator<(const IntVec& o) const {
    for (int i = 0; i < n && i < o.n; ++i)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return n < o.n;
  }

  IntVec operator+(const IntVec& o) const {
    IntVec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] + o.c[i];
    return r;
  }
  IntVec operator-(const IntVec& o) const {
    IntVec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = c[i] - o.c[i];
    return r;
  }
  IntVec operator-() const {
    IntVec r(n);
    for (int i = 0; i < n; ++i) r.c[i] = -c[i];
    return r;
  }

  long long height() const {
    long long h = 0;
    for (int i = 0; i < n; ++i) h += c[i];
    return h;
  }
  bool is_zero() const {
    for (int i = 0; i < n; ++i)
      if (c[i] != 0) return false;
    return true;
  }
  bool all_nonneg() const {
    for (int i = 0; i < n; ++i)
      if (c[i] < 0) return false;
    return true;
  }
  bool all_nonpos() const {
    for (int i = 0; i < n; ++i)
      if (c[i] > 0) return false;
    return true;
  }
};

inline QVec to_qvec(const IntVec& v) {
  QVec q(static_cast<size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) q[static_cast<size_t>(i)] = v[i];
  return q;
}

// Row-major n x n integer matrix, n <= kMaxRank.
struct IntMat {
  std::array<int32_t, kMaxRank * kMaxRank> m{};
  int8_t n = 0;

  IntMat() = default;
  explicit IntMat(int dim) : n(static_cast<int8_t>(dim)) {
    if (dim < 0 || dim > kMaxRank) throw DimensionTooLarge("matrix dimension exceeds engine cap");
  }

  int dim() const { return n; }
  int32_t operator()(int i, int j) const { return m[static_cast<size_t>(i * kMaxRank + j)]; }
  int32_t& operator()(int i, int j) { return m[static_cast<size_t>(i * kMaxRank + j)]; }

  static IntMat identity(int dim) {
    IntMat r(dim);
    for (int i = 0; i < dim; ++i) r(i, i) = 1;
    return r;
  }

  bool operator==(const IntMat& o) const {
    if (n != o.n) return false;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((*this)(i, j) != o(i, j)) return false;
    return true;
  }
  bool operator!=(const IntMat& o) const { return !(*this == o); }

  IntMat mul(const IntMat& o) const {
    IntMat r(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long acc = 0;
        for (int k = 0; k < n; ++k) acc += static_cast<long long>((*this)(i, k)) * o(k, j);
        r(i, j) = static_cast<int32_t>(acc);
      }
    return r;
  }

  IntVec act(const IntVec& v) const {
    IntVec r(n);
    for (int i = 0; i < n; ++i) {
      long long acc = 0;
      for (int k = 0; k < n; ++k) acc += static_cast<long long>((*this)(i, k)) * v[k];
      r[i] = static_cast<int32_t>(acc);
    }
    return r;
  }

  IntVec column(int j) const {
    IntVec r(n);
    for (int i = 0; i < n; ++i) r[i] = (*this)(i, j);
    return r;
  }
};

inline uint64_t fnv1a64(const void* data, size_t len, uint64_t h = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

struct IntVecHash {
  size_t operator()(const IntVec& v) const {
    uint64_t h = fnv1a64(&v.n, sizeof(v.n));
    h = fnv1a64(v.c.data(), sizeof(int32_t) * static_cast<size_t>(v.n), h);
    return static_cast<size_t>(h);
  }
};

struct IntMatHash {
  size_t operator()(const IntMat& a) const {
    uint64_t h = fnv1a64(&a.n, sizeof(a.n));
    for (int i = 0; i < a.n; ++i)
      h = fnv1a64(&a.m[static_cast<size_t>(i * kMaxRank)], sizeof(int32_t) * static_cast<size_t>(a.n), h);
    return static_cast<size_t>(h);
  }
};

inline uint64_t hash_string(const std::string& s, uint64_t h = 1469598103934665603ull) {
  return fnv1a64(s.data(), s.size(), h);
}

// Deterministic uniform sampling.  std::mt19937_64 output is specified by the
// standard; the rejection loop below avoids std::uniform_int_distribution,
// whose mapping is implementation-defined.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  // Uniform integer in [lo, hi], inclusive.
  long long uniform(long long lo, long long hi) {
    if (lo > hi) throw Error("empty sampling range");
    uint64_t range = static_cast<uint64_t>(hi - lo) + 1;
    if (range == 0) return static_cast<long long>(eng_());  // full 64-bit span
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % range);
    uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return lo + static_cast<long long>(v % range);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace brickforge::num

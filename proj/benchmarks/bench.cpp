#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "brickforge/brick.hpp"
#include "brickforge/bruhat.hpp"
#include "brickforge/cartan.hpp"
#include "brickforge/coxeter.hpp"
#include "brickforge/geometry.hpp"
#include "brickforge/subword.hpp"

using namespace brickforge;

namespace {

const coxeter::CoxeterSystem& system_of(const std::string& name) {
  static std::vector<std::pair<std::string, std::unique_ptr<coxeter::CoxeterSystem>>> cache;
  for (const auto& [n, s] : cache)
    if (n == name) return *s;
  cache.emplace_back(name, coxeter::build_system_ptr(coxeter::preset_cartan(name)));
  return *cache.back().second;
}

void BM_BuildSystem(benchmark::State& state, const std::string& name) {
  const coxeter::CartanMatrix c = coxeter::preset_cartan(name);
  for (auto _ : state) {
    auto sys = coxeter::build_system_ptr(c);
    benchmark::DoNotOptimize(sys->group_size());
  }
}

void BM_FacetEnumeration(benchmark::State& state, const std::string& name,
                         const std::string& word, const std::string& target) {
  const coxeter::CoxeterSystem& sys = system_of(name);
  const subword::Word q = subword::parse_word(word);
  const coxeter::GroupElement w = coxeter::parse_element(sys, target);
  for (auto _ : state) {
    subword::Complex sc(sys, q, w);
    benchmark::DoNotOptimize(sc.facets().size());
  }
}

void BM_Antigreedy(benchmark::State& state) {
  const coxeter::CoxeterSystem& sys = system_of("B2");
  const subword::Complex sc(sys, subword::parse_word("21122112"),
                            coxeter::parse_element(sys, "12"));
  brick::Functional f(2);
  f[0] = -2;
  f[1] = 1;
  for (auto _ : state) benchmark::DoNotOptimize(brick::f_antigreedy(sc, f).facet.size());
}

void BM_BrickPolyhedron(benchmark::State& state, const std::string& name,
                        const std::string& word, const std::string& target) {
  const coxeter::CoxeterSystem& sys = system_of(name);
  const subword::Complex sc(sys, subword::parse_word(word),
                            coxeter::parse_element(sys, target));
  for (auto _ : state) {
    const brick::BrickPolyhedron bp = brick::brick_polyhedron(sc);
    benchmark::DoNotOptimize(bp.vertex_facets.size());
  }
}

void BM_BruhatTable(benchmark::State& state) {
  const coxeter::CoxeterSystem& sys = system_of("B3");
  for (auto _ : state) {
    long long pairs = 0;
    for (coxeter::CoxeterSystem::Id x = 0; x < sys.group_size(); ++x)
      for (coxeter::CoxeterSystem::Id y = 0; y < sys.group_size(); ++y)
        pairs += bruhat::bruhat_leq(sys, sys.element(x), sys.element(y)) ? 1 : 0;
    benchmark::DoNotOptimize(pairs);
  }
}

void BM_DoubleDescription(benchmark::State& state) {
  const coxeter::CoxeterSystem& sys = system_of("B3");
  std::vector<geometry::QVec> gens;
  for (const coxeter::Root& r : sys.positive_roots()) gens.push_back(num::to_qvec(r));
  for (auto _ : state)
    benchmark::DoNotOptimize(geometry::double_description(gens).size());
}

}  // namespace

BENCHMARK_CAPTURE(BM_BuildSystem, B3, std::string("B3"));
BENCHMARK_CAPTURE(BM_BuildSystem, A3, std::string("A3"));
BENCHMARK_CAPTURE(BM_FacetEnumeration, B2_len8, std::string("B2"), std::string("21122112"),
                  std::string("12"));
BENCHMARK_CAPTURE(BM_FacetEnumeration, A2_len10, std::string("A2"),
                  std::string("1212121212"), std::string("121"));
BENCHMARK(BM_Antigreedy);
BENCHMARK_CAPTURE(BM_BrickPolyhedron, pentagon, std::string("A2"), std::string("11212"),
                  std::string("12"));
BENCHMARK_CAPTURE(BM_BrickPolyhedron, B2_len8, std::string("B2"), std::string("21122112"),
                  std::string("12"));
BENCHMARK(BM_BruhatTable);
BENCHMARK(BM_DoubleDescription);

BENCHMARK_MAIN();

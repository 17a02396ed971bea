#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brickforge/cartan.hpp"
#include "brickforge/coxeter.hpp"
#include "brickforge/errors.hpp"

using namespace brickforge;
using coxeter::CartanMatrix;
using coxeter::CoxeterSystem;
using coxeter::GroupElement;
using coxeter::Root;
using Id = CoxeterSystem::Id;

namespace {

Root rt(std::initializer_list<int> xs) {
  Root r(static_cast<int>(xs.size()));
  int i = 0;
  for (int x : xs) r[i++] = x;
  return r;
}

const CoxeterSystem& sys_of(const std::string& name) {
  static std::map<std::string, std::unique_ptr<CoxeterSystem>> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, coxeter::build_system_ptr(coxeter::preset_cartan(name))).first;
  return *it->second;
}

}  // namespace

TEST_CASE("cartan validation accepts the presets and rejects bad matrices") {
  CHECK(coxeter::preset_names().size() == 5);
  for (const auto& name : coxeter::preset_names())
    CHECK_NOTHROW(coxeter::validate_cartan(coxeter::preset_cartan(name)));
  CHECK_THROWS_AS(coxeter::preset_cartan("H3"), UsageError);

  CHECK_THROWS_AS(coxeter::validate_cartan({1, {{1}}}), NotCrystallographic);
  CHECK_THROWS_AS(coxeter::validate_cartan({2, {{2, 1}, {1, 2}}}), NotCrystallographic);
  CHECK_THROWS_AS(coxeter::validate_cartan({2, {{2, -1}, {0, 2}}}), NotCrystallographic);
  // infinite dihedral: the product of the off-diagonal entries is 4
  CHECK_THROWS_AS(coxeter::validate_cartan({2, {{2, -2}, {-2, 2}}}), NotCrystallographic);
  // affine A2: crystallographic but the form is only semidefinite
  CHECK_THROWS_AS(coxeter::validate_cartan({3, {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}}),
                  NotFinite);
  CHECK_THROWS_AS(
      coxeter::validate_cartan({9, std::vector<std::vector<int>>(9, std::vector<int>(9, 0))}),
      DimensionTooLarge);
}

TEST_CASE("minimal symmetrizers") {
  CHECK(coxeter::minimal_symmetrizer(coxeter::preset_cartan("A2")) ==
        std::vector<long long>{1, 1});
  CHECK(coxeter::minimal_symmetrizer(coxeter::preset_cartan("B2")) ==
        std::vector<long long>{2, 1});
  CHECK(coxeter::minimal_symmetrizer(coxeter::preset_cartan("B3")) ==
        std::vector<long long>{2, 2, 1});
  CHECK(coxeter::minimal_symmetrizer(coxeter::preset_cartan("A1xA1")) ==
        std::vector<long long>{1, 1, 1});
  CHECK(coxeter::minimal_symmetrizer({2, {{2, -1}, {-3, 2}}}) == std::vector<long long>{3, 1});
}

TEST_CASE("positive roots are sorted by height then coordinates") {
  const CoxeterSystem& a2 = sys_of("A2");
  CHECK(a2.positive_roots() == std::vector<Root>{rt({0, 1}), rt({1, 0}), rt({1, 1})});
  CHECK(a2.alpha_index(0) == 1);
  CHECK(a2.alpha_index(1) == 0);
  CHECK(a2.root_index(rt({1, 1})) == 2);
  CHECK(a2.root_index(rt({2, 1})) == -1);
  CHECK(a2.signed_root_id(rt({0, -1})) == -1);
  CHECK(a2.root_of(-1) == rt({0, -1}));
  CHECK(a2.root_of(3) == rt({1, 1}));
  CHECK_THROWS_AS(a2.signed_root_id(rt({1, 2})), NotARoot);

  const CoxeterSystem& b2 = sys_of("B2");
  CHECK(b2.positive_roots() ==
        std::vector<Root>{rt({0, 1}), rt({1, 0}), rt({1, 1}), rt({1, 2})});

  const CoxeterSystem& b3 = sys_of("B3");
  CHECK(b3.positive_roots() ==
        std::vector<Root>{rt({0, 0, 1}), rt({0, 1, 0}), rt({1, 0, 0}), rt({0, 1, 1}),
                          rt({1, 1, 0}), rt({0, 1, 2}), rt({1, 1, 1}), rt({1, 1, 2}),
                          rt({1, 2, 2})});

  CHECK(sys_of("A3").num_positive_roots() == 6);
  CHECK(sys_of("A1xA1").positive_roots() ==
        std::vector<Root>{rt({0, 0, 1}), rt({0, 1, 0}), rt({1, 0, 0})});
}

TEST_CASE("fundamental weights are the inverse Cartan columns") {
  using num::Rational;
  const CoxeterSystem& a2 = sys_of("A2");
  CHECK(a2.fundamental_weights()[0] == coxeter::Weight{Rational(2) / 3, Rational(1) / 3});
  CHECK(a2.fundamental_weights()[1] == coxeter::Weight{Rational(1) / 3, Rational(2) / 3});
  CHECK(a2.weight_denominator() == 3);
  CHECK(a2.weights_scaled() == std::vector<Root>{rt({2, 1}), rt({1, 2})});

  const CoxeterSystem& b2 = sys_of("B2");
  CHECK(b2.fundamental_weights()[0] == coxeter::Weight{Rational(1), Rational(1)});
  CHECK(b2.fundamental_weights()[1] == coxeter::Weight{Rational(1) / 2, Rational(1)});
  CHECK(b2.weight_denominator() == 2);
  CHECK(b2.weights_scaled() == std::vector<Root>{rt({2, 2}), rt({1, 2})});

  const CoxeterSystem& b3 = sys_of("B3");
  CHECK(b3.fundamental_weights()[0] ==
        coxeter::Weight{Rational(1), Rational(1), Rational(1)});
  CHECK(b3.fundamental_weights()[1] ==
        coxeter::Weight{Rational(1), Rational(2), Rational(2)});
  CHECK(b3.fundamental_weights()[2] ==
        coxeter::Weight{Rational(1) / 2, Rational(1), Rational(3) / 2});

  // defining identity: <omega_s, alpha_t^vee> = delta_st
  for (const auto& name : coxeter::preset_names()) {
    const CoxeterSystem& sys = sys_of(name);
    for (int s = 0; s < sys.rank(); ++s) {
      const num::IntVec& ws = sys.weights_scaled()[static_cast<size_t>(s)];
      for (int t = 0; t < sys.rank(); ++t) {
        Root alpha_t(sys.rank());
        alpha_t[t] = 1;
        // 2 <w_s, a_t> / <a_t, a_t>, scaled by the weight denominator
        long long num = 2 * sys.form(ws, alpha_t);
        long long den = sys.form(alpha_t, alpha_t);
        CHECK(num == (s == t ? sys.weight_denominator() * den : 0));
      }
    }
  }
}

TEST_CASE("symmetrized form") {
  const CoxeterSystem& b2 = sys_of("B2");
  CHECK(b2.symmetrizer() == std::vector<long long>{2, 1});
  CHECK(b2.gram(0, 0) == 4);
  CHECK(b2.gram(0, 1) == -2);
  CHECK(b2.gram(1, 0) == -2);
  CHECK(b2.gram(1, 1) == 2);
  CHECK(b2.form(rt({1, 0}), rt({1, 0})) == 4);
  CHECK(b2.form(rt({1, 1}), rt({1, 1})) == 2);
  CHECK(b2.form(rt({1, 0}), rt({0, 1})) == -2);
  // W-invariance
  for (Id e = 0; e < b2.group_size(); ++e) {
    const GroupElement w = b2.element(e);
    for (const Root& u : b2.positive_roots())
      for (const Root& v : b2.positive_roots())
        CHECK(b2.form(coxeter::act(b2, w, u), coxeter::act(b2, w, v)) == b2.form(u, v));
  }
}

TEST_CASE("group sizes and longest elements") {
  const std::vector<std::pair<std::string, std::pair<size_t, int>>> expect = {
      {"A2", {6, 3}}, {"B2", {8, 4}}, {"A3", {24, 6}}, {"B3", {48, 9}}, {"A1xA1", {8, 3}}};
  for (const auto& [name, want] : expect) {
    const CoxeterSystem& sys = sys_of(name);
    CHECK(sys.group_size() == want.first);
    CHECK(sys.longest_element().length == want.second);
    CHECK(sys.len(sys.id_longest()) == want.second);
    CHECK(coxeter::multiply(sys, sys.longest_element(), sys.longest_element()) ==
          sys.identity_element());
    // w0 maps the positive roots onto the negative ones
    for (const Root& b : sys.positive_roots())
      CHECK(coxeter::act(sys, sys.longest_element(), b).all_nonpos());
  }
}

TEST_CASE("reflections against the root-arithmetic formula") {
  for (const auto& name : {"A2", "B2", "B3"}) {
    const CoxeterSystem& sys = sys_of(name);
    const auto& pos = sys.positive_roots();
    for (int bi = 0; bi < static_cast<int>(pos.size()); ++bi) {
      const Root& beta = pos[static_cast<size_t>(bi)];
      const GroupElement t = coxeter::reflection_of_root(sys, beta);
      CHECK(coxeter::act(sys, t, beta) == -beta);
      CHECK(coxeter::multiply(sys, t, t) == sys.identity_element());
      CHECK(sys.element(sys.reflection_id(bi)) == t);
      CHECK(t.length % 2 == 1);
      const long long bb = sys.form(beta, beta);
      for (const Root& v : pos) {
        const long long coef2 = 2 * sys.form(v, beta);
        REQUIRE(coef2 % bb == 0);  // crystallographic: integer Cartan pairing
        const long long c = coef2 / bb;
        Root image = v;
        for (int i = 0; i < v.dim(); ++i)
          image[i] = v[i] - static_cast<int32_t>(c) * beta[i];
        CHECK(coxeter::act(sys, t, v) == image);
      }
    }
  }
}

TEST_CASE("length steps by one across a generator, ascent iff the column root is positive") {
  for (const auto& name : {"A2", "B2", "A1xA1"}) {
    const CoxeterSystem& sys = sys_of(name);
    for (Id e = 0; e < sys.group_size(); ++e) {
      for (int s = 0; s < sys.rank(); ++s) {
        const Id es = sys.right(e, s);
        const int d = sys.len(es) - sys.len(e);
        CHECK(std::abs(d) == 1);
        CHECK((d == 1) == (sys.col_root(e, s) > 0));
        CHECK(sys.right(es, s) == e);
        CHECK(sys.col_root(e, s) ==
              sys.act_root(e, static_cast<coxeter::SignedRoot>(sys.alpha_index(s) + 1)));
      }
      CHECK(sys.mul(e, sys.inv(e)) == sys.id_identity());
      CHECK(static_cast<int>(std::popcount(sys.inv_mask(e))) == sys.len(e));
      CHECK(sys.id_of_matrix(sys.element(e).matrix) == e);
    }
  }
}

TEST_CASE("inversion sets match the w-inverse sign characterization") {
  for (const auto& name : {"A2", "B2"}) {
    const CoxeterSystem& sys = sys_of(name);
    for (Id e = 0; e < sys.group_size(); ++e) {
      const GroupElement w = sys.element(e);
      const uint64_t mask = sys.inv_mask(e);
      CHECK(mask == coxeter::inversion_mask(sys, w));
      const std::vector<Root> inv = coxeter::inversion_set(sys, w);
      CHECK(static_cast<int>(inv.size()) == sys.len(e));
      for (int bi = 0; bi < sys.num_positive_roots(); ++bi) {
        const bool in_mask = (mask >> bi) & 1;
        // beta in Inv(w) iff w^{-1} beta is negative
        const bool neg =
            sys.act_root(sys.inv(e), static_cast<coxeter::SignedRoot>(bi + 1)) < 0;
        CHECK(in_mask == neg);
        const Root beta = sys.positive_roots()[static_cast<size_t>(bi)];
        CHECK(in_mask == (std::find(inv.begin(), inv.end(), beta) != inv.end()));
      }
    }
  }
}

TEST_CASE("canonical words: lexicographically least reduced expressions") {
  const CoxeterSystem& a2 = sys_of("A2");
  CHECK(coxeter::format_element(a2, a2.identity_element()) == "e");
  CHECK(coxeter::format_element(a2, a2.longest_element()) == "121");
  CHECK(coxeter::canonical_word(a2, a2.longest_element()) == std::vector<int>{1, 2, 1});

  const CoxeterSystem& b2 = sys_of("B2");
  CHECK(coxeter::format_element(b2, b2.longest_element()) == "1212");
  CHECK(coxeter::format_element(b2, coxeter::parse_element(b2, "21")) == "21");

  const CoxeterSystem& ax = sys_of("A1xA1");
  CHECK(coxeter::format_element(ax, ax.longest_element()) == "123");
  CHECK(coxeter::format_element(ax, coxeter::parse_element(ax, "31")) == "13");

  for (const auto& name : {"A2", "B2", "A1xA1"}) {
    const CoxeterSystem& sys = sys_of(name);
    for (Id e = 0; e < sys.group_size(); ++e) {
      const GroupElement w = sys.element(e);
      const std::vector<int> cw = coxeter::canonical_word(sys, w);
      CHECK(coxeter::is_reduced(sys, cw));
      CHECK(coxeter::element_from_word(sys, cw) == w);
      CHECK(coxeter::parse_element(sys, coxeter::format_element(sys, w)) == w);
      CHECK(sys.lexmin_word(e) == cw);
    }
  }
}

TEST_CASE("parsing accepts non-reduced words and rejects junk") {
  const CoxeterSystem& b2 = sys_of("B2");
  CHECK(coxeter::parse_element(b2, "11") == b2.identity_element());
  CHECK(coxeter::parse_element(b2, "w0") == b2.longest_element());
  CHECK(coxeter::parse_element(b2, "12121") == coxeter::parse_element(b2, "212"));
  const CoxeterSystem& a2 = sys_of("A2");
  CHECK(coxeter::parse_element(a2, "12121") == coxeter::parse_element(a2, "2"));
  CHECK_THROWS_AS(coxeter::parse_element(b2, "13"), Error);
  CHECK_THROWS_AS(coxeter::parse_element(b2, "x"), Error);
  CHECK(coxeter::is_reduced(b2, {1, 2, 1, 2}));
  CHECK_FALSE(coxeter::is_reduced(b2, {1, 1}));
  CHECK_FALSE(coxeter::is_reduced(b2, {1, 2, 1, 2, 1}));
  CHECK(coxeter::element_from_word(b2, {}) == b2.identity_element());
}

TEST_CASE("multiplication tables agree with matrix arithmetic") {
  const CoxeterSystem& b2 = sys_of("B2");
  for (Id a = 0; a < b2.group_size(); ++a)
    for (Id b = 0; b < b2.group_size(); ++b)
      CHECK(b2.mul(a, b) == b2.id_of(coxeter::multiply(b2, b2.element(a), b2.element(b))));
  for (Id e = 0; e < b2.group_size(); ++e) {
    CHECK(b2.element(b2.inv(e)) == coxeter::inverse_element(b2, b2.element(e)));
    for (int s = 0; s < b2.rank(); ++s) {
      const GroupElement simple{b2.simple_reflection(s), 1};
      CHECK(b2.left(s, e) == b2.id_of(coxeter::multiply(b2, simple, b2.element(e))));
    }
  }
}

TEST_CASE("weak order is inversion-set containment") {
  const CoxeterSystem& b2 = sys_of("B2");
  for (Id x = 0; x < b2.group_size(); ++x)
    for (Id y = 0; y < b2.group_size(); ++y) {
      const bool leq = coxeter::weak_leq(b2, b2.element(x), b2.element(y));
      CHECK(leq == ((b2.inv_mask(x) & ~b2.inv_mask(y)) == 0));
    }
}

TEST_CASE("bruhat order sanity on ids") {
  for (const auto& name : {"A2", "B2"}) {
    const CoxeterSystem& sys = sys_of(name);
    for (Id x = 0; x < sys.group_size(); ++x) {
      CHECK(sys.bruhat_leq_ids(sys.id_identity(), x));
      CHECK(sys.bruhat_leq_ids(x, sys.id_longest()));
      for (Id y = 0; y < sys.group_size(); ++y) {
        if (sys.bruhat_leq_ids(x, y)) CHECK(sys.len(x) <= sys.len(y));
        if (sys.bruhat_leq_ids(x, y) && sys.bruhat_leq_ids(y, x)) CHECK(x == y);
      }
    }
  }
  const CoxeterSystem& a2 = sys_of("A2");
  const Id a = a2.id_of(coxeter::parse_element(a2, "12"));
  const Id b = a2.id_of(coxeter::parse_element(a2, "21"));
  CHECK_FALSE(a2.bruhat_leq_ids(a, b));
  CHECK_FALSE(a2.bruhat_leq_ids(b, a));
}

TEST_CASE("weights transform by the same matrices as roots") {
  using num::Rational;
  const CoxeterSystem& a2 = sys_of("A2");
  const GroupElement s1 = coxeter::parse_element(a2, "1");
  const coxeter::Weight w1 = a2.fundamental_weights()[0];
  CHECK(coxeter::act(a2, s1, w1) == coxeter::Weight{Rational(-1) / 3, Rational(1) / 3});
  const coxeter::Weight w2 = a2.fundamental_weights()[1];
  CHECK(coxeter::act(a2, s1, w2) == w2);  // s1 fixes omega_2
}

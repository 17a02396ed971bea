// Acceptance suite: one line per criterion, exit 0 only when all pass.
//
//   1  worked examples reproduced bit-exactly through the CLI
//   2  facet-cone intersection equals the interval cone (sweep)
//   3  the antigreedy facet is the unique facet passing the sign conditions
//   4  SC_f is one flip component and matches the position-deleted complex
//   5  brick polyhedron structure: V=H, vertices, flips, containment, fan
//   6  interval cone lemmas on pairs and sampled triples
//   7  enumeration oracles: brute-force facets and subword-deletion order

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brickforge/brick.hpp"
#include "brickforge/cli.hpp"
#include "brickforge/coxeter.hpp"
#include "brickforge/geometry.hpp"
#include "brickforge/subword.hpp"
#include "brickforge/verify.hpp"

using json = nlohmann::ordered_json;
using namespace brickforge;

namespace {

std::vector<std::string> g_failures;

bool expect(bool ok, const std::string& what) {
  if (!ok) g_failures.push_back(what);
  return ok;
}

std::optional<json> run_json(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) {
    std::string cmd;
    for (const std::string& a : args) cmd += a + " ";
    g_failures.push_back("command failed (" + std::to_string(code) + "): " + cmd + err.str());
    return std::nullopt;
  }
  return json::parse(out.str());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(1) << s << "s";
  return os.str();
}

bool check_roots_output() {
  bool ok = true;
  const auto a2 = run_json({"roots", "--system", "A2"});
  if (!a2) return false;
  ok &= expect((*a2)["cartan"] == json::parse("[[2,-1],[-1,2]]"), "A2 Cartan matrix");
  ok &= expect((*a2)["positive_roots"] == json::parse("[[0,1],[1,0],[1,1]]"),
               "A2 positive roots");
  ok &= expect((*a2)["fundamental_weights"] == json::parse("[[[2,3],[1,3]],[[1,3],[2,3]]]"),
               "A2 fundamental weights");

  const auto b2 = run_json({"roots", "--system", "B2"});
  if (!b2) return false;
  ok &= expect((*b2)["cartan"] == json::parse("[[2,-1],[-2,2]]"), "B2 Cartan matrix");
  ok &= expect((*b2)["positive_roots"] == json::parse("[[0,1],[1,0],[1,1],[1,2]]"),
               "B2 positive roots");
  ok &= expect((*b2)["fundamental_weights"] == json::parse("[[[1,1],[1,1]],[[1,2],[1,1]]]"),
               "B2 fundamental weights");

  const auto b3 = run_json({"roots", "--system", "B3"});
  if (!b3) return false;
  ok &= expect((*b3)["positive_roots"] ==
                   json::parse("[[0,0,1],[0,1,0],[1,0,0],[0,1,1],[1,1,0],"
                               "[0,1,2],[1,1,1],[1,1,2],[1,2,2]]"),
               "B3 positive roots");
  ok &= expect(
      (*b3)["fundamental_weights"] ==
          json::parse("[[[1,1],[1,1],[1,1]],[[1,1],[2,1],[2,1]],[[1,2],[1,1],[3,2]]]"),
      "B3 fundamental weights");
  ok &= expect((*b3)["group_order"] == 48, "B3 group order");
  return ok;
}

bool check_hexagon_facets() {
  const auto j = run_json({"facets", "--system", "A2", "--word", "1212", "--target", "12"});
  if (!j) return false;
  bool ok = expect((*j)["demazure"] == "121", "SC(1212,12) Demazure product");
  if (!expect((*j)["facets"].size() == 3, "SC(1212,12) has three facets")) return false;
  const json& fs = (*j)["facets"];
  ok &= expect(fs[0]["positions"] == json::parse("[1,2]") &&
                   fs[1]["positions"] == json::parse("[2,3]") &&
                   fs[2]["positions"] == json::parse("[3,4]"),
               "SC(1212,12) facet positions");
  ok &= expect(fs[0]["root_configuration"] == json::parse("[[1,0],[0,1]]"),
               "Roots({1,2}) of SC(1212,12)");
  ok &= expect(fs[1]["root_configuration"] == json::parse("[[1,1],[-1,0]]"),
               "Roots({2,3}) of SC(1212,12)");
  ok &= expect(fs[2]["root_configuration"] == json::parse("[[0,1],[-1,-1]]"),
               "Roots({3,4}) of SC(1212,12)");
  return ok;
}

bool check_rank3_example() {
  const auto cone = run_json({"bruhat-cone", "--system", "B3", "--x", "1", "--y", "w0"});
  if (!cone) return false;
  bool ok = expect((*cone)["atoms"] == json::parse("[[0,0,1],[0,1,0],[1,1,0]]"),
                   "atom labels of [s1, w0] in B3");

  const auto j =
      run_json({"facets", "--system", "B3", "--word", "123123123", "--target", "1"});
  if (!j) return false;
  ok &= expect((*j)["eplus"] == json::parse("[[0,0,1],[0,1,0],[1,1,0]]"),
               "E+ of SC(123123123, 1)");
  if (!expect((*j)["facets"].size() == 3, "SC(123123123,1) has three facets")) return false;
  const json& fs = (*j)["facets"];
  ok &= expect(fs[0]["positions"] == json::parse("[1,2,3,4,5,6,8,9]") &&
                   fs[1]["positions"] == json::parse("[1,2,3,5,6,7,8,9]") &&
                   fs[2]["positions"] == json::parse("[2,3,4,5,6,7,8,9]"),
               "SC(123123123,1) facet positions");
  ok &= expect(fs[0]["root_configuration"] ==
                   json::parse("[[1,0,0],[0,1,0],[0,0,1],[1,0,0],[0,1,0],[0,0,1],"
                               "[1,1,0],[0,0,1]]"),
               "first B3 root configuration");
  ok &= expect(fs[1]["root_configuration"] ==
                   json::parse("[[1,0,0],[0,1,0],[0,0,1],[1,1,0],[0,0,1],[-1,0,0],"
                               "[1,1,0],[0,0,1]]"),
               "second B3 root configuration");
  ok &= expect(fs[2]["root_configuration"] ==
                   json::parse("[[1,1,0],[0,0,1],[-1,0,0],[1,1,0],[0,0,1],[-1,0,0],"
                               "[1,1,0],[0,0,1]]"),
               "third B3 root configuration");
  return ok;
}

bool check_antigreedy_trace() {
  const auto j = run_json({"antigreedy", "--system", "B2", "--word", "21122112",
                           "--target", "12", "--functional=-2,1"});
  if (!j) return false;
  bool ok = expect((*j)["facet"] == json::parse("[1,3,5,6,7,8]"),
                   "antigreedy facet of SC(21122112, 12) at f=(-2,1)");
  if (!expect((*j)["steps"].size() == 8, "trace has eight steps")) return false;
  const std::vector<int> rules = {1, 4, 2, 4, 2, 1, 1, 2};
  const json roots = json::parse(
      "[[0,1],[1,0],[-1,0],[1,1],[-1,-1],[1,2],[1,2],[-1,-1]]");
  const std::vector<std::string> prefixes = {"e", "1", "1", "12", "12", "12", "12", "12"};
  for (size_t k = 0; k < 8; ++k) {
    const json& st = (*j)["steps"][k];
    ok &= expect(st["position"] == static_cast<int>(k) + 1 && st["condition"] == rules[k] &&
                     st["root"] == roots[k] && st["prefix"] == prefixes[k],
                 "trace step " + std::to_string(k + 1));
  }
  ok &= expect((*j)["complement_word"] == "12", "trace complement spells the target");
  return ok;
}

bool check_pentagon_bricks() {
  const auto j = run_json({"brickpoly", "--system", "A2", "--word", "11212", "--target",
                           "12", "--emit", "vrep"});
  if (!j) return false;
  if (!expect((*j)["brick_vectors"].size() == 5, "five brick vectors")) return false;
  const json expected = json::parse(
      "[[[-8,3],[-7,3]],[[-5,3],[-7,3]],[[-2,3],[-4,3]],[[-2,3],[-7,3]],[[1,3],[-4,3]]]");
  bool ok = true;
  for (size_t i = 0; i < 5; ++i)
    ok &= expect((*j)["brick_vectors"][i]["vector"] == expected[i],
                 "brick vector " + std::to_string(i + 1) + " of SC(11212, 12)");
  return ok;
}

bool check_halfline_polyhedron() {
  const auto j = run_json({"brickpoly", "--system", "B2", "--word", "2221", "--target",
                           "2", "--emit", "vrep,hrep,kappa"});
  if (!j) return false;
  const json bricks = json::parse(
      "[[[-5,2],[-4,1]],[[-5,2],[-3,1]],[[-5,2],[-2,1]]]");
  bool ok = true;
  for (size_t i = 0; i < 3; ++i)
    ok &= expect((*j)["brick_vectors"][i]["vector"] == bricks[i],
                 "brick vector " + std::to_string(i + 1) + " of SC(2221, 2)");
  ok &= expect((*j)["recession_rays"] == json::parse("[[[1,1],[2,1]]]"),
               "recession ray (1,2) of SC(2221, 2)");
  std::vector<json> verts((*j)["vrep"]["vertices"].begin(), (*j)["vrep"]["vertices"].end());
  std::sort(verts.begin(), verts.end());
  ok &= expect(verts == std::vector<json>{json::parse("[[-5,2],[-4,1]]"),
                                          json::parse("[[-5,2],[-2,1]]")},
               "vertices -(1/2)(5,8) and -(1/2)(5,4) of SC(2221, 2)");

  std::map<std::string, json> kappa;
  for (const json& e : (*j)["kappa"]) kappa[e["element"].get<std::string>()] = e["facet"];
  ok &= expect(kappa.size() == 4, "kappa domain of SC(2221, 2) has four chambers");
  for (const char* w : {"e", "1", "12"})
    ok &= expect(kappa.count(w) && kappa[w] == json::parse("[1,2,4]"),
                 std::string("kappa(") + w + ") of SC(2221, 2)");
  ok &= expect(kappa.count("2") && kappa["2"] == json::parse("[2,3,4]"),
               "kappa(2) of SC(2221, 2)");

  // the polyhedron equals conv{-(1/2)(5,8), -(1/2)(5,4)} + cone{(1,2)}, checked
  // by mutual containment in exact arithmetic
  const auto sys_ptr = coxeter::build_system_ptr(coxeter::preset_cartan("B2"));
  const coxeter::CoxeterSystem& sys = *sys_ptr;
  const subword::Complex sc(sys, subword::parse_word("2221"),
                            coxeter::parse_element(sys, "2"));
  const brick::BrickPolyhedron bp = brick::brick_polyhedron(sc);
  using geometry::QVec;
  using geometry::Rational;
  const QVec lo{Rational(-5) / 2, -4}, hi{Rational(-5) / 2, -2}, mid{Rational(-5) / 2, -3};
  const QVec ray{1, 2};
  const geometry::RationalPolyhedron expected = geometry::minkowski_vrep({lo, hi}, {ray});
  ok &= expect(bp.poly.halfspaces.has_value(), "computed H-representation present");
  if (bp.poly.halfspaces) {
    ok &= expect(geometry::rows_satisfy_point(*bp.poly.halfspaces, lo) &&
                     geometry::rows_satisfy_point(*bp.poly.halfspaces, hi) &&
                     geometry::rows_satisfy_point(*bp.poly.halfspaces, mid) &&
                     geometry::rows_satisfy_ray(*bp.poly.halfspaces, ray),
                 "segment and ray lie in the computed polyhedron");
  }
  bool backward = true;
  for (const QVec& p : bp.poly.points) backward &= geometry::polyhedron_contains(expected, p);
  for (const QVec& r : bp.poly.rays) backward &= geometry::in_conic_hull({ray}, r);
  ok &= expect(backward, "computed polyhedron lies in the expected one");
  return ok;
}

bool check_pentagon_kappa() {
  const auto j = run_json({"kappa", "--system", "A2", "--word", "11212", "--target", "12"});
  if (!j) return false;
  std::map<std::string, json> kappa;
  for (const json& e : (*j)["kappa"]) kappa[e["element"].get<std::string>()] = e["facet"];
  bool ok = expect(kappa.size() == 3, "kappa domain of SC(11212, 12) has three chambers");
  ok &= expect(kappa.count("e") && kappa["e"] == json::parse("[1,2,3]"),
               "kappa(e) of SC(11212, 12)");
  ok &= expect(kappa.count("1") && kappa["1"] == json::parse("[2,3,4]"),
               "kappa(1) of SC(11212, 12)");
  ok &= expect(kappa.count("12") && kappa["12"] == json::parse("[2,4,5]"),
               "kappa(12) of SC(11212, 12)");
  return ok;
}

bool criterion_examples(std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = check_roots_output();
  ok &= check_hexagon_facets();
  ok &= check_rank3_example();
  ok &= check_antigreedy_trace();
  ok &= check_pentagon_bricks();
  ok &= check_halfline_polyhedron();
  ok &= check_pentagon_kappa();
  const double secs = seconds_since(t0);
  ok &= expect(secs < 5.0, "examples finished in " + fmt_secs(secs) + ", budget is 5s");
  note = "worked examples, " + fmt_secs(secs);
  return ok;
}

bool criterion_check(const std::string& name, std::string& note) {
  const auto t0 = std::chrono::steady_clock::now();
  const verify::CheckOutcome r = verify::run_check(name, verify::SweepConfig{});
  if (!r.passed) g_failures.push_back(name + ": " + r.failure);
  note = name + ", " + std::to_string(r.cases) + " cases, " + fmt_secs(seconds_since(t0));
  return r.passed;
}

bool criterion_oracles(std::string& note) {
  std::string a, b;
  const bool pa = criterion_check("oracle_facets", a);
  const bool pb = criterion_check("oracle_bruhat", b);
  note = a + "; " + b;
  return pa && pb;
}

}  // namespace

int main() {
  int failed = 0;
  int number = 0;
  const auto report = [&](bool passed, const std::string& note) {
    ++number;
    std::cout << "criterion " << number << ": " << (passed ? "PASS" : "FAIL") << " (" << note
              << ")\n"
              << std::flush;
    if (!passed) {
      ++failed;
      for (const std::string& f : g_failures) std::cerr << "  [criterion " << number << "] "
                                                        << f << "\n";
    }
    g_failures.clear();
  };

  std::string note;
  report(criterion_examples(note), note);
  report(criterion_check("cone_equality", note), note);
  report(criterion_check("antigreedy_uniqueness", note), note);
  report(criterion_check("sc_f_components", note), note);
  report(criterion_check("brick_polyhedron", note), note);
  report(criterion_check("dyer", note), note);
  report(criterion_oracles(note), note);

  if (failed == 0)
    std::cout << "acceptance: all 7 criteria passed\n";
  else
    std::cout << "acceptance: " << failed << " of 7 criteria failed\n";
  return failed == 0 ? 0 : 1;
}

#include "brickforge/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "brickforge/brick.hpp"
#include "brickforge/bruhat.hpp"
#include "brickforge/cartan.hpp"
#include "brickforge/coxeter.hpp"
#include "brickforge/errors.hpp"
#include "brickforge/geometry.hpp"
#include "brickforge/subword.hpp"
#include "brickforge/svg.hpp"
#include "brickforge/verify.hpp"

namespace brickforge::cli {
namespace {

using coxeter::CoxeterSystem;
using coxeter::GroupElement;
using coxeter::Root;
using geometry::QVec;
using geometry::Rational;
using json = nlohmann::ordered_json;
using subword::Complex;
using subword::Facet;
using subword::Word;

const CoxeterSystem& get_system(const std::string& name) {
  static std::map<std::string, std::unique_ptr<CoxeterSystem>> cache;
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, coxeter::build_system_ptr(coxeter::preset_cartan(name))).first;
  return *it->second;
}

std::vector<int> parse_csv_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(what + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(what + " must be a comma-separated integer list");
  return out;
}

json json_rat(const Rational& q) {
  return json::array({boost::multiprecision::numerator(q).convert_to<long long>(),
                      boost::multiprecision::denominator(q).convert_to<long long>()});
}

json json_qvec(const QVec& v) {
  json a = json::array();
  for (const Rational& q : v) a.push_back(json_rat(q));
  return a;
}

json json_ivec(const num::IntVec& v) {
  json a = json::array();
  for (int i = 0; i < v.dim(); ++i) a.push_back(v[i]);
  return a;
}

json json_roots(const std::vector<Root>& rs) {
  json a = json::array();
  for (const Root& r : rs) a.push_back(json_ivec(r));
  return a;
}

std::string element_word(const CoxeterSystem& sys, const GroupElement& g) {
  return coxeter::format_element(sys, g);
}

// shared instance arguments of the complex-based subcommands
struct InstanceArgs {
  std::string system;
  std::string word;
  std::string target;

  const CoxeterSystem& sys() const { return get_system(system); }
  Complex make() const {
    const CoxeterSystem& s = sys();
    return Complex(s, subword::parse_word(word), coxeter::parse_element(s, target));
  }
  void stamp(json& j) const {
    j["system"] = system;
    j["word"] = word;
    j["target"] = target;
  }
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("--system", a.system, "preset system name")->required();
  cmd->add_option("--word", a.word, "word as a digit string, e.g. 1212")->required();
  cmd->add_option("--target", a.target, "target element: digit string, 'e' or 'w0'")->required();
}

std::string run_roots(const std::string& system) {
  const CoxeterSystem& sys = get_system(system);
  const int n = sys.rank();
  json j;
  j["system"] = system;
  j["rank"] = n;
  json cart = json::array();
  for (int s = 0; s < n; ++s) {
    json row = json::array();
    for (int t = 0; t < n; ++t) row.push_back(sys.cartan().a[static_cast<size_t>(s)][static_cast<size_t>(t)]);
    cart.push_back(row);
  }
  j["cartan"] = cart;
  j["symmetrizer"] = sys.symmetrizer();
  j["positive_roots"] = json_roots(sys.positive_roots());
  json alpha = json::array();
  for (int s = 0; s < n; ++s) alpha.push_back(sys.alpha_index(s));
  j["simple_root_indices"] = alpha;
  json weights = json::array();
  for (const auto& w : sys.fundamental_weights()) weights.push_back(json_qvec(w));
  j["fundamental_weights"] = weights;
  j["longest_element"] = element_word(sys, sys.longest_element());
  j["group_order"] = sys.group_size();
  return j.dump(2) + "\n";
}

std::string run_demazure(const std::string& system, const std::string& word) {
  const CoxeterSystem& sys = get_system(system);
  json j;
  j["demazure"] = element_word(sys, subword::demazure_product(sys, subword::parse_word(word)));
  return j.dump(2) + "\n";
}

std::string run_facets(const InstanceArgs& args) {
  const Complex sc = args.make();
  const CoxeterSystem& sys = sc.system();
  json j;
  args.stamp(j);
  j["demazure"] = element_word(sys, sc.demazure());
  j["empty"] = sc.empty();
  if (sc.empty()) {
    j["facets"] = json::array();
    return j.dump(2) + "\n";
  }
  json ep = json::array();
  for (int b : sc.eplus_root_indices())
    ep.push_back(json_ivec(sys.positive_roots()[static_cast<size_t>(b)]));
  j["eplus"] = ep;
  const Facet greedy = sc.greedy_facet();
  const Facet anti = sc.antigreedy_facet();
  json fs = json::array();
  for (const Facet& f : sc.facets()) {
    json e;
    e["positions"] = f;
    e["root_configuration"] = json_roots(sc.root_configuration(f));
    json flips = json::array();
    for (int p : f) flips.push_back(sc.flippable(f, p));
    e["flippable"] = flips;
    e["greedy"] = f == greedy;
    e["antigreedy"] = f == anti;
    fs.push_back(e);
  }
  j["facets"] = fs;
  return j.dump(2) + "\n";
}

std::string run_flips(const InstanceArgs& args, const std::string& facet_csv) {
  const Complex sc = args.make();
  Facet f = parse_csv_ints(facet_csv, "--facet");
  std::sort(f.begin(), f.end());
  if (!sc.is_facet(f)) throw Error("the given position set is not a facet");
  json j;
  args.stamp(j);
  j["facet"] = f;
  json flips = json::array();
  for (int p : f) {
    json e;
    e["position"] = p;
    e["root"] = json_ivec(sc.root_function(f, p));
    const bool can = sc.flippable(f, p);
    e["flippable"] = can;
    if (can) {
      const auto [g, partner] = sc.flip(f, p);
      e["partner"] = partner;
      e["result"] = g;
    }
    flips.push_back(e);
  }
  j["flips"] = flips;
  return j.dump(2) + "\n";
}

std::string run_antigreedy(const InstanceArgs& args, const std::string& functional_csv) {
  const Complex sc = args.make();
  const CoxeterSystem& sys = sc.system();
  const std::vector<int> coeffs = parse_csv_ints(functional_csv, "--functional");
  if (static_cast<int>(coeffs.size()) != sys.rank())
    throw UsageError("--functional needs one coefficient per generator");
  brick::Functional f(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) f[i] = coeffs[static_cast<size_t>(i)];
  const brick::AntigreedyTrace tr = brick::f_antigreedy(sc, f);
  json j;
  args.stamp(j);
  j["functional"] = json_ivec(f);
  j["facet"] = tr.facet;
  Word complement_word;
  json complement = json::array();
  for (int p = 1; p <= sc.size(); ++p)
    if (!std::binary_search(tr.facet.begin(), tr.facet.end(), p)) {
      complement.push_back(p);
      complement_word.push_back(sc.word()[static_cast<size_t>(p) - 1]);
    }
  j["complement"] = complement;
  j["complement_word"] = subword::format_word(complement_word);
  json steps = json::array();
  for (const brick::StepRecord& st : tr.steps) {
    json e;
    e["position"] = st.position;
    e["root"] = json_ivec(st.beta);
    e["condition"] = st.rule;
    e["prefix"] = element_word(sys, st.prefix);
    steps.push_back(e);
  }
  j["steps"] = steps;
  return j.dump(2) + "\n";
}

json json_kappa(const Complex& sc, const brick::KappaMap& km) {
  const CoxeterSystem& sys = sc.system();
  json arr = json::array();
  for (size_t i = 0; i < km.ideal_ids.size(); ++i) {
    json e;
    e["element"] = element_word(sys, sys.element(km.ideal_ids[i]));
    e["facet"] = sc.facets()[static_cast<size_t>(km.facet_index[i])];
    arr.push_back(e);
  }
  return arr;
}

std::string run_brickpoly(const InstanceArgs& args, const std::vector<std::string>& emit,
                          bool& raw_svg, std::string& svg_text) {
  for (const std::string& e : emit)
    if (e != "vrep" && e != "hrep" && e != "kappa" && e != "normalfan" && e != "svg")
      throw UsageError("--emit: unknown section '" + e + "'");
  const auto wants = [&](const char* name) {
    return std::find(emit.begin(), emit.end(), name) != emit.end();
  };
  const Complex sc = args.make();
  const CoxeterSystem& sys = sc.system();
  const brick::BrickPolyhedron bp = brick::brick_polyhedron(sc);
  if (wants("svg")) svg_text = svg::render_rank2(bp);
  if (emit.size() == 1 && wants("svg")) {
    raw_svg = true;
    return svg_text;
  }
  json j;
  args.stamp(j);
  j["demazure"] = element_word(sys, sc.demazure());
  j["polytopal"] = bp.polytopal;
  json bricks = json::array();
  for (size_t fi = 0; fi < bp.brick_vectors.size(); ++fi) {
    json e;
    e["facet"] = sc.facets()[fi];
    e["vector"] = json_qvec(bp.brick_vectors[fi]);
    e["vertex"] = std::find(bp.vertex_facets.begin(), bp.vertex_facets.end(),
                            static_cast<int>(fi)) != bp.vertex_facets.end();
    bricks.push_back(e);
  }
  j["brick_vectors"] = bricks;
  json rays = json::array();
  for (const QVec& r : bp.recession_rays) rays.push_back(json_qvec(r));
  j["recession_rays"] = rays;
  if (wants("vrep")) {
    json v;
    json pts = json::array();
    for (const QVec& p : bp.poly.points) pts.push_back(json_qvec(p));
    v["points"] = pts;
    json rr = json::array();
    for (const QVec& r : bp.poly.rays) rr.push_back(json_qvec(r));
    v["rays"] = rr;
    json vx = json::array();
    for (const QVec& p : geometry::vertices_of(bp.poly)) vx.push_back(json_qvec(p));
    v["vertices"] = vx;
    j["vrep"] = v;
  }
  if (wants("hrep")) {
    json rows = json::array();
    for (const geometry::HalfspaceQ& h : *bp.poly.halfspaces) {
      json e;
      e["normal"] = json_qvec(h.f);
      e["offset"] = json_rat(h.c);
      rows.push_back(e);
    }
    j["hrep"] = rows;
  }
  if (wants("kappa")) j["kappa"] = json_kappa(sc, brick::kappa(sc));
  if (wants("normalfan")) {
    const brick::NormalFan fan = brick::normal_fan(sc);
    json nf;
    json chambers = json::array();
    for (size_t fi = 0; fi < fan.chambers_by_facet.size(); ++fi) {
      json e;
      e["facet"] = sc.facets()[fi];
      json els = json::array();
      for (CoxeterSystem::Id z : fan.chambers_by_facet[fi])
        els.push_back(element_word(sys, sys.element(z)));
      e["elements"] = els;
      chambers.push_back(e);
    }
    nf["chambers"] = chambers;
    json del = json::array();
    for (CoxeterSystem::Id z : fan.deleted_chambers) del.push_back(element_word(sys, sys.element(z)));
    nf["deleted"] = del;
    j["normalfan"] = nf;
  }
  if (wants("svg")) j["svg"] = svg_text;
  return j.dump(2) + "\n";
}

std::string run_kappa(const InstanceArgs& args) {
  const Complex sc = args.make();
  const CoxeterSystem& sys = sc.system();
  const brick::KappaMap km = brick::kappa(sc);
  json j;
  args.stamp(j);
  json ideal = json::array();
  for (CoxeterSystem::Id z : km.ideal_ids) ideal.push_back(element_word(sys, sys.element(z)));
  j["ideal"] = ideal;
  j["kappa"] = json_kappa(sc, km);
  std::vector<int> pointed = km.facet_index;
  std::sort(pointed.begin(), pointed.end());
  pointed.erase(std::unique(pointed.begin(), pointed.end()), pointed.end());
  json pf = json::array();
  for (int fi : pointed) pf.push_back(sc.facets()[static_cast<size_t>(fi)]);
  j["pointed_facets"] = pf;
  return j.dump(2) + "\n";
}

std::string run_bruhat_cone(const std::string& system, const std::string& xs,
                            const std::string& ys) {
  const CoxeterSystem& sys = get_system(system);
  const GroupElement x = coxeter::parse_element(sys, xs);
  const GroupElement y = coxeter::parse_element(sys, ys);
  const bruhat::BruhatEdgeLabelSet labels = bruhat::cover_label_sets(sys, x, y);
  json j;
  j["system"] = system;
  j["x"] = element_word(sys, x);
  j["y"] = element_word(sys, y);
  j["atoms"] = json_roots(labels.atoms_labels);
  j["coatoms"] = json_roots(labels.coatoms_labels);
  const auto cone_json = [&](const std::vector<Root>& gens) {
    const geometry::RationalCone c = bruhat::bruhat_cone(sys, gens);
    json e;
    e["generators"] = json_roots(gens);
    std::vector<QVec> rows;
    if (c.generators.empty()) {
      // cone {0}: cut out by +-coordinate halfspaces
      for (int i = 0; i < sys.rank(); ++i) {
        QVec row(static_cast<size_t>(sys.rank()), Rational(0));
        row[static_cast<size_t>(i)] = 1;
        rows.push_back(row);
        rows.push_back(geometry::negated(row));
      }
    } else {
      rows = geometry::double_description(c.generators);
    }
    json out_rows = json::array();
    for (const QVec& h : rows) out_rows.push_back(json_qvec(h));
    e["halfspaces"] = out_rows;
    return e;
  };
  j["cone_plus"] = cone_json(labels.atoms_labels);
  j["cone_minus"] = cone_json(labels.coatoms_labels);
  return j.dump(2) + "\n";
}

std::string run_plot(const InstanceArgs& args) {
  const Complex sc = args.make();
  return svg::render_rank2(brick::brick_polyhedron(sc));
}

std::string run_verify(const verify::SweepConfig& cfg, const std::vector<std::string>& checks,
                       int& exit_code) {
  for (const std::string& c : checks)
    if (!verify::is_check_name(c)) throw UsageError("unknown check: " + c);
  for (const std::string& s : cfg.systems) {
    const auto names = coxeter::preset_names();
    if (std::find(names.begin(), names.end(), s) == names.end())
      throw UsageError("unknown system: " + s);
  }
  const std::vector<verify::CheckOutcome> results = verify::run_checks(checks, cfg);
  size_t width = 8;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width) + 2) << "check" << std::right
      << std::setw(10) << "cases"
      << "  result\n";
  int failed = 0;
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name << std::right
        << std::setw(10) << r.cases << "  " << (r.passed ? "pass" : "FAIL") << "\n";
    if (!r.passed) {
      ++failed;
      out << "  counterexample: " << r.failure << "\n";
    }
  }
  if (failed == 0)
    out << "all " << results.size() << " checks passed\n";
  else
    out << failed << " of " << results.size() << " checks failed\n";
  exit_code = failed == 0 ? 0 : 1;
  return out.str();
}

void deliver(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open output file: " + path);
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact subword complexes, interval cones and brick polyhedra"};
  app.require_subcommand(1);

  std::string output_path;

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "root system, weights and Cartan data");
  std::string roots_system;
  roots_cmd->add_option("--system", roots_system, "preset system name")->required();

  // demazure
  auto* dem_cmd = app.add_subcommand("demazure", "Demazure product of a word");
  std::string dem_system, dem_word;
  dem_cmd->add_option("--system", dem_system, "preset system name")->required();
  dem_cmd->add_option("--word", dem_word, "word as a digit string")->required();

  // facets
  auto* facets_cmd = app.add_subcommand("facets", "facets and root configurations");
  InstanceArgs facets_args;
  add_instance_options(facets_cmd, facets_args);

  // flips
  auto* flips_cmd = app.add_subcommand("flips", "flips available from one facet");
  InstanceArgs flips_args;
  std::string flips_facet;
  add_instance_options(flips_cmd, flips_args);
  flips_cmd->add_option("--facet", flips_facet, "facet positions, e.g. 1,2")->required();

  // antigreedy
  auto* anti_cmd = app.add_subcommand("antigreedy", "f-antigreedy facet with its scan trace");
  InstanceArgs anti_args;
  std::string anti_functional;
  add_instance_options(anti_cmd, anti_args);
  anti_cmd->add_option("--functional", anti_functional,
                       "integer coefficients on the simple roots, e.g. --functional=-2,1")
      ->required();

  // brickpoly
  auto* brick_cmd = app.add_subcommand("brickpoly", "brick polyhedron of an instance");
  InstanceArgs brick_args;
  std::vector<std::string> brick_emit{"vrep", "hrep"};
  add_instance_options(brick_cmd, brick_args);
  brick_cmd->add_option("--emit", brick_emit, "sections: vrep,hrep,kappa,normalfan,svg")
      ->delimiter(',');
  brick_cmd->add_option("--output", output_path, "write the result to a file");

  // kappa
  auto* kappa_cmd = app.add_subcommand("kappa", "kappa map on the weak order ideal");
  InstanceArgs kappa_args;
  add_instance_options(kappa_cmd, kappa_args);

  // bruhat-cone
  auto* cone_cmd = app.add_subcommand("bruhat-cone", "interval cone labels and halfspaces");
  std::string cone_system, cone_x, cone_y;
  cone_cmd->add_option("--system", cone_system, "preset system name")->required();
  cone_cmd->add_option("--x", cone_x, "lower element")->required();
  cone_cmd->add_option("--y", cone_y, "upper element")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the structural checks over a sweep");
  verify::SweepConfig sweep;
  std::vector<std::string> checks = verify::check_names();
  verify_cmd
      ->add_option("--systems,--system", sweep.systems, "preset systems (default A2,B2,A3,B3)")
      ->delimiter(',');
  verify_cmd->add_option("--checks", checks, "subset of the named checks")->delimiter(',');
  verify_cmd->add_option("--max-word-length", sweep.max_word_length, "sweep word length cap")
      ->check(CLI::Range(1, 64));
  verify_cmd
      ->add_option("--functional-samples", sweep.functional_samples,
                   "admissible functionals per instance")
      ->check(CLI::Range(0, 100000));
  verify_cmd->add_option("--seed", sweep.seed, "seed for randomized functionals");
  verify_cmd
      ->add_option("--triple-samples", sweep.triple_samples,
                   "sampled triples per rank>=3 system")
      ->check(CLI::Range(0LL, 100000000LL));
  verify_cmd->add_option("--targets", sweep.targets, "restrict targets to these words")
      ->delimiter(',');
  verify_cmd->add_option("--output", output_path, "write the table to a file");

  // plot
  auto* plot_cmd = app.add_subcommand("plot", "SVG drawing of a rank-2 brick polyhedron");
  InstanceArgs plot_args;
  add_instance_options(plot_cmd, plot_args);
  plot_cmd->add_option("--output", output_path, "write the SVG to a file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::string text;
    int code = 0;
    if (*roots_cmd) text = run_roots(roots_system);
    else if (*dem_cmd) text = run_demazure(dem_system, dem_word);
    else if (*facets_cmd) text = run_facets(facets_args);
    else if (*flips_cmd) text = run_flips(flips_args, flips_facet);
    else if (*anti_cmd) text = run_antigreedy(anti_args, anti_functional);
    else if (*brick_cmd) {
      bool raw = false;
      std::string svg_text;
      text = run_brickpoly(brick_args, brick_emit, raw, svg_text);
    } else if (*kappa_cmd) text = run_kappa(kappa_args);
    else if (*cone_cmd) text = run_bruhat_cone(cone_system, cone_x, cone_y);
    else if (*verify_cmd) text = run_verify(sweep, checks, code);
    else if (*plot_cmd) text = run_plot(plot_args);
    deliver(text, output_path, out);
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace brickforge::cli

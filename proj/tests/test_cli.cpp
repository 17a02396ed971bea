#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "brickforge/cli.hpp"

using json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = brickforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json out_json(const RunResult& r) { return json::parse(r.out); }

}  // namespace

TEST_CASE("demazure emits a single-key document") {
  const RunResult r = run({"demazure", "--system", "A2", "--word", "1212"});
  REQUIRE(r.code == 0);
  CHECK(out_json(r) == json{{"demazure", "121"}});
  // Dem(2121) over B2 is the longest element, canonically spelled 1212
  CHECK(run({"demazure", "--system", "B2", "--word", "2121"}).out.find("\"1212\"") !=
        std::string::npos);
}

TEST_CASE("roots reports the full static data of a preset") {
  const RunResult r = run({"roots", "--system", "A2"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  CHECK(j["rank"] == 2);
  CHECK(j["group_order"] == 6);
  CHECK(j["cartan"] == json::parse("[[2,-1],[-1,2]]"));
  CHECK(j["symmetrizer"] == json::parse("[1,1]"));
  CHECK(j["positive_roots"] == json::parse("[[0,1],[1,0],[1,1]]"));
  CHECK(j["simple_root_indices"] == json::parse("[1,0]"));
  CHECK(j["fundamental_weights"] == json::parse("[[[2,3],[1,3]],[[1,3],[2,3]]]"));
  CHECK(j["longest_element"] == "121");

  const json b3 = out_json(run({"roots", "--system", "B3"}));
  CHECK(b3["group_order"] == 48);
  CHECK(b3["positive_roots"].size() == 9);
}

TEST_CASE("facets lists positions, root configurations and the two extreme facets") {
  const RunResult r =
      run({"facets", "--system", "A2", "--word", "1212", "--target", "12"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  CHECK(j["demazure"] == "121");
  CHECK(j["empty"] == false);
  CHECK(j["eplus"] == json::parse("[[0,1]]"));
  REQUIRE(j["facets"].size() == 3);
  CHECK(j["facets"][0]["positions"] == json::parse("[1,2]"));
  CHECK(j["facets"][0]["root_configuration"] == json::parse("[[1,0],[0,1]]"));
  CHECK(j["facets"][0]["flippable"] == json::parse("[true,false]"));
  CHECK(j["facets"][0]["greedy"] == true);
  CHECK(j["facets"][0]["antigreedy"] == false);
  CHECK(j["facets"][2]["positions"] == json::parse("[3,4]"));
  CHECK(j["facets"][2]["antigreedy"] == true);
}

TEST_CASE("an unreachable target yields the empty complex, not an error") {
  const RunResult r = run({"facets", "--system", "A2", "--word", "1", "--target", "w0"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  CHECK(j["empty"] == true);
  CHECK(j["facets"] == json::array());
}

TEST_CASE("flips reports partners for the flippable positions") {
  const RunResult r = run({"flips", "--system", "A2", "--word", "1212", "--target", "12",
                           "--facet", "1,2"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  REQUIRE(j["flips"].size() == 2);
  CHECK(j["flips"][0]["position"] == 1);
  CHECK(j["flips"][0]["flippable"] == true);
  CHECK(j["flips"][0]["partner"] == 3);
  CHECK(j["flips"][0]["result"] == json::parse("[2,3]"));
  CHECK(j["flips"][1]["flippable"] == false);
  CHECK_FALSE(j["flips"][1].contains("partner"));

  const RunResult bad = run({"flips", "--system", "A2", "--word", "1212", "--target", "12",
                             "--facet", "1,3"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("not a facet") != std::string::npos);
}

TEST_CASE("antigreedy prints the scan with one record per position") {
  const RunResult r = run({"antigreedy", "--system", "B2", "--word", "21122112",
                           "--target", "12", "--functional=-2,1"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  CHECK(j["functional"] == json::parse("[-2,1]"));
  CHECK(j["facet"] == json::parse("[1,3,5,6,7,8]"));
  CHECK(j["complement"] == json::parse("[2,4]"));
  CHECK(j["complement_word"] == "12");
  REQUIRE(j["steps"].size() == 8);
  const std::vector<int> rules = {1, 4, 2, 4, 2, 1, 1, 2};
  for (size_t k = 0; k < 8; ++k) {
    CHECK(j["steps"][k]["position"] == static_cast<int>(k) + 1);
    CHECK(j["steps"][k]["condition"] == rules[k]);
  }
  CHECK(j["steps"][1]["root"] == json::parse("[1,0]"));
  CHECK(j["steps"][1]["prefix"] == "1");
  CHECK(j["steps"][7]["root"] == json::parse("[-1,-1]"));
  CHECK(j["steps"][7]["prefix"] == "12");

  const RunResult bad = run({"antigreedy", "--system", "B2", "--word", "21122112",
                             "--target", "12", "--functional=0,-1"});
  CHECK(bad.code == 1);
}

TEST_CASE("brickpoly emits vectors, both representations, kappa and the fan") {
  const RunResult r = run({"brickpoly", "--system", "A2", "--word", "11212", "--target",
                           "12", "--emit", "vrep,hrep,kappa,normalfan"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  CHECK(j["polytopal"] == false);
  REQUIRE(j["brick_vectors"].size() == 5);
  CHECK(j["brick_vectors"][0]["facet"] == json::parse("[1,2,3]"));
  CHECK(j["brick_vectors"][0]["vector"] == json::parse("[[-8,3],[-7,3]]"));
  CHECK(j["brick_vectors"][0]["vertex"] == true);
  CHECK(j["brick_vectors"][1]["vertex"] == false);
  CHECK(j["brick_vectors"][3]["vector"] == json::parse("[[-2,3],[-7,3]]"));
  CHECK(j["brick_vectors"][4]["vector"] == json::parse("[[1,3],[-4,3]]"));
  CHECK(j["recession_rays"] == json::parse("[[[0,1],[1,1]]]"));
  CHECK(j["vrep"]["vertices"].size() == 3);
  CHECK(j["hrep"].size() >= 3);
  REQUIRE(j["kappa"].size() == 3);
  CHECK(j["kappa"][0]["element"] == "e");
  CHECK(j["kappa"][0]["facet"] == json::parse("[1,2,3]"));
  std::set<std::string> deleted;
  for (const auto& w : j["normalfan"]["deleted"]) deleted.insert(w.get<std::string>());
  CHECK(deleted == std::set<std::string>{"2", "21", "121"});

  // default emit keeps only the two representations
  const json d = out_json(
      run({"brickpoly", "--system", "A2", "--word", "11212", "--target", "12"}));
  CHECK(d.contains("vrep"));
  CHECK(d.contains("hrep"));
  CHECK_FALSE(d.contains("kappa"));
  CHECK_FALSE(d.contains("normalfan"));

  const RunResult bad = run({"brickpoly", "--system", "A2", "--word", "11212", "--target",
                             "12", "--emit", "nonsense"});
  CHECK(bad.code == 2);
}

TEST_CASE("brickpoly --emit svg alone yields the raw drawing") {
  const RunResult r = run({"brickpoly", "--system", "A2", "--word", "11212", "--target",
                           "12", "--emit", "svg"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);

  // combined with other sections the drawing is a string field instead
  const json j = out_json(run({"brickpoly", "--system", "A2", "--word", "11212",
                               "--target", "12", "--emit", "vrep,svg"}));
  CHECK(j["svg"].get<std::string>().rfind("<svg", 0) == 0);
}

TEST_CASE("kappa lists the weak order ideal and the pointed facets") {
  const RunResult r = run({"kappa", "--system", "B2", "--word", "2221", "--target", "2"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  std::set<std::string> ideal;
  for (const auto& w : j["ideal"]) ideal.insert(w.get<std::string>());
  CHECK(ideal == std::set<std::string>{"e", "1", "12", "2"});
  CHECK(j["kappa"].size() == 4);
  CHECK(j["pointed_facets"] == json::parse("[[1,2,4],[2,3,4]]"));
}

TEST_CASE("bruhat-cone reports labels and halfspaces for both ends") {
  const RunResult r = run({"bruhat-cone", "--system", "A2", "--x", "e", "--y", "w0"});
  REQUIRE(r.code == 0);
  const json j = out_json(r);
  CHECK(j["x"] == "e");
  CHECK(j["y"] == "121");
  CHECK(j["atoms"] == json::parse("[[0,1],[1,0]]"));
  CHECK(j["coatoms"] == json::parse("[[0,1],[1,0]]"));
  CHECK(j["cone_plus"]["generators"] == j["atoms"]);
  CHECK(j["cone_plus"]["halfspaces"].size() >= 2);

  // x == y: both label sets are empty and the cones degenerate to the origin
  const json same = out_json(run({"bruhat-cone", "--system", "A2", "--x", "12", "--y", "12"}));
  CHECK(same["atoms"] == json::array());
  CHECK(same["cone_plus"]["halfspaces"].size() == 4);

  const RunResult bad = run({"bruhat-cone", "--system", "A2", "--x", "w0", "--y", "e"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error") != std::string::npos);
}

TEST_CASE("verify runs a small sweep and prints a result table") {
  const RunResult r = run({"verify", "--systems", "A2", "--checks",
                           "oracle_facets,oracle_bruhat", "--max-word-length", "3"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("oracle_facets") != std::string::npos);
  CHECK(r.out.find("pass") != std::string::npos);
  CHECK(r.out.find("all 2 checks passed") != std::string::npos);

  CHECK(run({"verify", "--checks", "nonsense"}).code == 2);
  CHECK(run({"verify", "--systems", "H3"}).code == 2);
}

TEST_CASE("plot draws a standalone SVG document") {
  const RunResult r =
      run({"plot", "--system", "B2", "--word", "2221", "--target", "2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("</svg>") != std::string::npos);
}

TEST_CASE("usage problems exit with 2 and help exits with 0") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"facets", "--system", "A2"}).code == 2);
  CHECK(run({"facets", "--system", "H4", "--word", "1", "--target", "e"}).code == 2);
  CHECK(run({"antigreedy", "--system", "A2", "--word", "121", "--target", "e",
             "--functional", "1"})
            .code == 2);
  CHECK(run({"flips", "--system", "A2", "--word", "121", "--target", "e", "--facet", "x"})
            .code == 2);

  const RunResult help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("brickpoly") != std::string::npos);
  CHECK(help.out.find("verify") != std::string::npos);
}

TEST_CASE("output is deterministic and --output mirrors it to a file") {
  const std::vector<std::string> args = {"brickpoly", "--system", "A2", "--word", "11212",
                                         "--target", "12", "--emit", "vrep,hrep,kappa"};
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.out == b.out);

  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "brickforge_cli_roundtrip.json";
  std::vector<std::string> with_file = args;
  with_file.push_back("--output");
  with_file.push_back(path.string());
  const RunResult f = run(with_file);
  REQUIRE(f.code == 0);
  CHECK(f.out.empty());
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == a.out);
  in.close();
  std::remove(path.string().c_str());
}

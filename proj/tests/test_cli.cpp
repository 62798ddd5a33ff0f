#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "curv/certify.hpp"
#include "curv/cli.hpp"
#include "curv/generators.hpp"
#include "curv/graph_io.hpp"

using namespace curv;
using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "curvtool");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("curvtool_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("certify prints the sweep for (324,152,70,72)") {
  const auto r = run({"certify", "--params", "324,152,70,72", "--sweep-transcript"});
  REQUIRE(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["kappa"]["num"] == "9");
  CHECK(doc["kappa"]["den"] == "19");
  CHECK(doc["outcome"]["kind"] == "sharp-by-discriminant-sweep");
  CHECK(doc["transcript"].size() == 40);
  CHECK(doc["config"]["params"] == "324,152,70,72");
  for (const auto& row : doc["transcript"]) CHECK(row["feasible"] == false);
}

TEST_CASE("config errors exit 2 with a JSON record") {
  const auto unknown = run({"certify", "--params", "9,4,1,2", "--bogus"});
  CHECK(unknown.code == kExitConfig);
  CHECK(json::parse(unknown.err)["error"] == "ParseError");

  const auto bad = run({"certify", "--params", "9,4,1"});
  CHECK(bad.code == kExitConfig);

  const auto invalid = run({"certify", "--params", "5,5,0,0"});
  CHECK(invalid.code == kExitConfig);
  CHECK(json::parse(invalid.err)["error"] == "InvalidParams");

  CHECK(run({"corollary", "--q", "7"}).code == kExitConfig);
  CHECK(run({"curvature", "--graph", "/nonexistent/file.g6"}).code == kExitConfig);
  CHECK(run({}).code == kExitConfig);
}

TEST_CASE("gen writes a graph that reads back") {
  const auto path = temp_path("rook4.g6");
  const auto r = run({"gen", "--name", "rook", "--k", "4", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(json::parse(r.out)["config"]["name"] == "rook");
  CHECK(read_graph_file(path) == rook_graph(4));

  const auto jpath = temp_path("p13.json");
  REQUIRE(run({"gen", "--name", "paley", "--q", "13", "--out", jpath.string(), "--format", "json"}).code == kExitOk);
  CHECK(read_graph_file(jpath) == paley_graph(13));
  std::filesystem::remove(path);
  std::filesystem::remove(jpath);
}

TEST_CASE("curvature output round-trips and is byte-deterministic") {
  const auto path = temp_path("shri.g6");
  REQUIRE(run({"gen", "--name", "shrikhande", "--out", path.string()}).code == kExitOk);
  const auto a = run({"curvature", "--graph", path.string(), "--threads", "1"});
  REQUIRE(a.code == kExitOk);
  const auto b = run({"curvature", "--graph", path.string(), "--threads", "1"});
  CHECK(a.out == b.out);
  const auto doc = json::parse(a.out);
  CHECK(doc["edges"].size() == 48);
  CHECK(doc["min_kappa"]["num"] == "1");
  CHECK(doc["min_kappa"]["den"] == "3");
  CHECK(json::parse(doc.dump()) == doc);

  const auto csv = run({"curvature", "--graph", path.string(), "--format", "csv", "--threads", "1"});
  REQUIRE(csv.code == kExitOk);
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("# config ", 0) == 0);
  CHECK(json::parse(line.substr(9))["command"] == "curvature");
  std::getline(lines, line);
  CHECK(line == "x,y,kappa_num,kappa_den,delta,upper_num,upper_den,sharp");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find(",1,3,2,") != std::string::npos);
  }
  CHECK(rows == 48);

  const auto one = run({"curvature", "--graph", path.string(), "--edge", "0,1", "--witness"});
  REQUIRE(one.code == kExitOk);
  CHECK(json::parse(one.out)["edges"][0].contains("witness"));
  CHECK(run({"curvature", "--graph", path.string(), "--edge", "0,x"}).code == kExitConfig);
  std::filesystem::remove(path);
}

TEST_CASE("scan CSV round-trips through the reader") {
  const auto path = temp_path("scan.csv");
  const auto r = run({"scan", "--max-n", "100", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  const std::string text = slurp(path);
  const auto rows = read_scan_csv(text);
  const auto direct = scan_parameters(100);
  REQUIRE(rows.size() == direct.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(to_csv_line(rows[i]) == to_csv_line(direct[i]));
  CHECK(text.rfind("# config {", 0) == 0);
  const auto again = run({"scan", "--max-n", "100", "--threads", "1"});
  const auto again2 = run({"scan", "--max-n", "100", "--threads", "1"});
  CHECK(again.out == again2.out);
  std::filesystem::remove(path);
}

TEST_CASE("match, spectrum and sharpness commands") {
  const auto path = temp_path("p9.g6");
  REQUIRE(run({"gen", "--name", "paley", "--q", "9", "--out", path.string()}).code == kExitOk);

  const auto m = run({"match", "--graph", path.string(), "--edge", "0,1", "--witness"});
  REQUIRE(m.code == kExitOk);
  const auto md = json::parse(m.out);
  CHECK(md["perfect"] == true);
  CHECK(md["pairs"].size() == 2);

  const auto sp = run({"spectrum", "--params", "10,3,0,1"});
  REQUIRE(sp.code == kExitOk);
  const auto sd = json::parse(sp.out)["spectrum"];
  CHECK(sd["m2"] == 5);
  CHECK(sd["lambda2"]["text"] == "2/3");

  const auto sg = run({"spectrum", "--graph", path.string()});
  REQUIRE(sg.code == kExitOk);
  CHECK(json::parse(sg.out)["identity_verified"] == true);
  CHECK(run({"spectrum"}).code == kExitConfig);

  const auto sh = run({"sharpness", "--graph", path.string()});
  REQUIRE(sh.code == kExitOk);
  CHECK(json::parse(sh.out)["sharp"] == true);
  std::filesystem::remove(path);
}

TEST_CASE("corollary and verify-conjecture") {
  const auto c = run({"corollary", "--q", "13", "--mode", "exhaustive"});
  REQUIRE(c.code == kExitOk);
  CHECK(json::parse(c.out)["subsets_tested"] == 67);
  const auto s1 = run({"corollary", "--q", "25", "--mode", "sampled", "--trials", "500", "--seed", "4"});
  const auto s2 = run({"corollary", "--q", "25", "--mode", "sampled", "--trials", "500", "--seed", "4"});
  REQUIRE(s1.code == kExitOk);
  CHECK(s1.out == s2.out);
  CHECK(run({"corollary", "--q", "13", "--mode", "random"}).code == kExitConfig);

  const auto v = run({"verify-conjecture", "--gamma-max", "7"});
  REQUIRE(v.code == kExitOk);
  const auto doc = json::parse(v.out);
  CHECK(doc["all_ok"] == true);
  std::vector<int> gammas;
  for (const auto& r : doc["results"]) gammas.push_back(r["gamma"]);
  CHECK(gammas == std::vector<int>{2, 3, 4, 6, 7});
}

#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

extern std::vector<std::string> g_test_args;

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string cli_path() {
  for (size_t i = 0; i + 1 < g_test_args.size(); ++i)
    if (g_test_args[i] == "--cli") return g_test_args[i + 1];
  FAIL("pass --cli <path-to-binary>");
  return "";
}

fs::path temp_dir() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("dihedrant_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args, const std::string& env_prefix = "") {
  static int counter = 0;
  fs::path out = temp_dir() / ("out" + std::to_string(counter) + ".txt");
  fs::path err = temp_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  std::string cmd = env_prefix + shell_quote(cli_path());
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " > " + shell_quote(out.string()) + " 2> " + shell_quote(err.string());
  int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::vector<json> parse_jsonl(const std::string& text) {
  std::vector<json> records;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (!j.is_discarded()) records.push_back(std::move(j));
  }
  return records;
}

const char* kThm14Spec = "n=12; S=family(thm14, p=3, pi=1)";

}  // namespace

TEST_CASE("classify text report") {
  auto r = run_cli({"classify", kThm14Spec, "--no-timings"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("case: CaseV") != std::string::npos);
  CHECK(r.out.find("arc_transitive: yes") != std::string::npos);
  CHECK(r.out.find("aut_order: 2^17 * 3^2 * 5") != std::string::npos);
  CHECK(r.out.find("girth: 4") != std::string::npos);
  CHECK(r.out.find("diameter: 3") != std::string::npos);
}

TEST_CASE("classify json report") {
  auto r = run_cli({"classify", "--format", "json", "--no-timings", kThm14Spec});
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["input"]["n"] == 12);
  CHECK(j["input"]["family"] == "thm14");
  CHECK(j["input"]["size"] == 10);
  CHECK(j["invariants"]["connected"] == true);
  CHECK(j["invariants"]["inner_automorphic"] == true);
  CHECK(j["invariants"]["girth"] == 4);
  CHECK(j["invariants"]["diameter"] == 3);
  CHECK(j["invariants"]["bipartite"] == true);
  CHECK(j["classification"]["case"] == "CaseV");
  CHECK(j["classification"]["pi"] == 1);
  CHECK(j["classification"]["delta"].get<std::vector<int>>() == std::vector<int>{1, 5, 7, 11});
  CHECK(j["classification"]["arc_transitive"] == true);
  CHECK(j["classification"]["variant"].is_null());
  CHECK(j["aut"]["order"]["string"] == "2^17 * 3^2 * 5");
  CHECK(j["aut"]["order"]["factored"] == json({{"2", 17}, {"3", 2}, {"5", 1}}));
  CHECK(j["aut"]["order"]["value"] == 5898240);
  CHECK(j["transitivity"]["arc"] == true);
  CHECK(j["transitivity"]["two_arc"] == false);
  CHECK(j["transitivity"]["two_distance"] == false);
  CHECK(!j.contains("timings"));
}

TEST_CASE("json output is byte-stable") {
  std::vector<std::string> args{"classify", "--format", "json", "--no-timings",
                                "n=6; S=classes(r1, f0)"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("invariants on a disconnected set") {
  auto r = run_cli({"invariants", "--format", "json", "--no-timings", "n=6; S=classes(r2)"});
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["invariants"]["connected"] == false);
  CHECK(j["invariants"]["diameter"].is_null());
  CHECK(j["invariants"]["bipartite"].is_null());
  CHECK(j["invariants"]["girth"] == 3);
}

TEST_CASE("aut command reports generators and order") {
  auto r = run_cli({"aut", "--format", "json", "--no-timings", "n=4; S=family(complete)"});
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["aut"]["degree"] == 8);
  CHECK(j["aut"]["order"]["value"] == 40320);
  auto gens = j["aut"]["generators"];
  CHECK(!gens.empty());
  for (const auto& g : gens) {
    auto img = g.get<std::vector<int>>();
    auto sorted = img;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> identity{0, 1, 2, 3, 4, 5, 6, 7};
    CHECK(sorted == identity);
  }
}

TEST_CASE("quotient reports blocks, cover, and kernel") {
  auto r = run_cli({"quotient", "--format", "json", "--no-timings", kThm14Spec});
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["blocks"]["cell_count"] == 12);
  CHECK(j["blocks"]["side_one"].size() == 6);
  CHECK(j["quotient"]["cover_multiplicity"] == 2);
  CHECK(j["quotient"]["recognized"] == "K_{6,6} - 6K_2");
  CHECK(j["kernel"]["generator_count"] == 12);
  CHECK(j["kernel"]["all_automorphisms"] == true);
  CHECK(j["kernel"]["product_is_central_translation"] == true);
  CHECK(j["kernel"]["span_order"]["string"] == "2^12");

  auto plain = run_cli({"quotient", "--format", "json", "--no-timings", "n=6; S=family(knn_v1)"});
  REQUIRE(plain.exit_code == 0);
  json q = json::parse(plain.out);
  CHECK(q["blocks"]["cell_count"] == 6);
  CHECK(q["kernel"].is_null());
  CHECK(q["quotient"]["cover_multiplicity"] == 2);

  auto odd = run_cli({"quotient", "n=5; S=classes(f0)"});
  CHECK(odd.exit_code == 2);
}

TEST_CASE("verify command exit codes") {
  auto pass = run_cli({"verify", "lemma42", "--p", "3"});
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("PASS") != std::string::npos);
  CHECK(pass.out.find("FAIL") == std::string::npos);

  auto fail = run_cli({"verify", "lemma35", "--n", "5"});
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("FAIL") != std::string::npos);

  auto sampled = run_cli({"verify", "prop21", "--n", "6", "--samples", "20"});
  CHECK(sampled.exit_code == 0);

  auto missing = run_cli({"verify", "thm14"});
  CHECK(missing.exit_code == 2);

  auto unknown = run_cli({"verify", "bogus", "--n", "6"});
  CHECK(unknown.exit_code == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli({}).exit_code == 2);
  auto bad_spec = run_cli({"classify", "n=; S=raw(r1)"});
  CHECK(bad_spec.exit_code == 2);
  CHECK(bad_spec.err.find("position") != std::string::npos);
  CHECK(run_cli({"classify", "--format", "xml", "n=6; S=raw(r1)"}).exit_code == 2);
  CHECK(run_cli({"scan", "--n", "9"}).exit_code == 2);
  CHECK(run_cli({"classify", "n=6; S=family(thm14, p=3, pi=1)"}).exit_code == 2);
}

TEST_CASE("node cap exits 3") {
  auto r = run_cli({"aut", "--node-cap", "2", kThm14Spec});
  CHECK(r.exit_code == 3);
  CHECK(r.err.find("2") != std::string::npos);
}

TEST_CASE("help exits 0") {
  auto r = run_cli({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
  CHECK(run_cli({"scan", "--help"}).exit_code == 0);
}

TEST_CASE("--out writes the report file") {
  fs::path f = temp_dir() / "report.json";
  auto r = run_cli({"classify", "--format", "json", "--no-timings", "--out", f.string(),
                    "n=6; S=family(complete)"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  json j = json::parse(slurp(f));
  CHECK(j["classification"]["case"] == "CaseIII");
  CHECK(j["aut"]["order"]["value"] == 479001600);
}

TEST_CASE("flags may follow the subcommand") {
  auto r = run_cli({"invariants", "n=6; S=raw(r1, f0)", "--format", "json", "--no-timings"});
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["invariants"]["connected"] == true);
}

TEST_CASE("scan streams jsonl to stdout") {
  auto r = run_cli({"scan", "--n", "8", "--jobs", "1"});
  REQUIRE(r.exit_code == 0);
  auto records = parse_jsonl(r.out);
  REQUIRE(records.size() == 3);
  CHECK(records[0]["delta"].get<std::vector<int>>() == std::vector<int>{1, 7});
  CHECK(records[2]["excluded_by_size"] == true);
  CHECK(records[2]["arc_transitive"].is_null());
  CHECK(records[0]["connected"] == true);
}

TEST_CASE("scan resumes from an existing file") {
  fs::path f = temp_dir() / "scan.jsonl";
  fs::remove(f);

  auto first = run_cli({"scan", "--n", "8", "--out", f.string()});
  REQUIRE(first.exit_code == 0);
  CHECK(parse_jsonl(slurp(f)).size() == 3);

  auto again = run_cli({"scan", "--n", "8", "--out", f.string()});
  REQUIRE(again.exit_code == 0);
  CHECK(parse_jsonl(slurp(f)).size() == 3);

  {
    std::ofstream append(f, std::ios::app);
    append << "{\"n\": 8, \"pi\"\n";
    append << "not json\n";
  }

  auto both = run_cli({"scan", "--n", "8", "--n", "12", "--out", f.string(), "--jobs", "2"},
                      "DIHEDRANT_LOG=info ");
  REQUIRE(both.exit_code == 0);
  CHECK(!both.err.empty());
  auto records = parse_jsonl(slurp(f));
  REQUIRE(records.size() == 10);
  std::vector<std::vector<int>> flagged;
  for (const auto& rec : records)
    if (rec["arc_transitive"] == true) flagged.push_back(rec["delta"].get<std::vector<int>>());
  CHECK(flagged == std::vector<std::vector<int>>{{1, 5, 7, 11}});
}

TEST_CASE("log env writes progress to stderr") {
  auto r = run_cli({"classify", "n=6; S=classes(r1, f0)"}, "DIHEDRANT_LOG=info ");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("classify:") != std::string::npos);
  auto quiet = run_cli({"classify", "n=6; S=classes(r1, f0)"});
  CHECK(quiet.err.empty());
}

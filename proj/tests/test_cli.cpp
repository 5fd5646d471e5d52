#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "asccert/cli.hpp"
#include "asccert/io.hpp"

using namespace asccert;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "asccert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("verify") {
  const Run r4 = run({"verify", "-k", "4", "--strategy", "brute"});
  CHECK(r4.code == kExitOk);
  const Json d4 = Json::parse(r4.out);
  CHECK(d4["is_basic"] == true);
  CHECK(d4["max_coordinate"] == "1/4");
  CHECK(d4["family"]["size"] == 10);

  const Run r6 = run({"verify", "-k", "6", "--strategy", "both", "--trials", "2000"});
  CHECK(r6.code == kExitOk);
  const Json d6 = Json::parse(r6.out);
  CHECK(d6["family"]["size"] == 21);
  CHECK(d6["family"]["strategies_agree"] == true);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({"verify", "-k", "5"}).code == kExitUsage);
  CHECK(run({"gen", "-k", "3"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"gen", "-k", "4", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "-k", "8", "--strategy", "brute"}).code == kExitUsage);
  CHECK(run({"export-lp", "-k", "4", "--out", "/nonexistent-dir/x.lp"}).code == kExitUsage);
}

TEST_CASE("reduce") {
  const Run r4 = run({"reduce", "-k", "4"});
  CHECK(r4.code == kExitOk);
  const auto q1 = r4.out.find("Q_1: (g=1, h=3)");
  const auto q2 = r4.out.find("Q_2: (g=3, h=5)");
  const auto q3 = r4.out.find("Q_3: (g=5, h=7)");
  REQUIRE(q3 != std::string::npos);
  CHECK(q1 < q2);
  CHECK(q2 < q3);
  CHECK(r4.out.find("final {l2,l3}, paths {2,3}") > q3);
  CHECK(r4.out.find("reduction ok") != std::string::npos);

  const Run r6 = run({"reduce", "-k", "6", "--trace"});
  CHECK(r6.code == kExitOk);
  const Json d6 = Json::parse(r6.out);
  CHECK(d6["ok"] == true);
  REQUIRE(d6["traces"].size() == 5);
  for (const auto& t : d6["traces"]) CHECK(t["final"].size() == 3);
}

TEST_CASE("gen and export-lp write files") {
  const auto dir = std::filesystem::temp_directory_path() / "asccert_cli_test";
  std::filesystem::create_directories(dir);
  const std::string json_path = (dir / "k4.json").string();
  CHECK(run({"gen", "-k", "4", "--out", json_path}).code == kExitOk);
  std::ifstream in(json_path);
  CHECK(instance_from_json(Json::parse(in)) == build_instance(4));

  const Run dot = run({"gen", "-k", "4", "--format", "dot-links"});
  CHECK(dot.out.rfind("graph links_k4 {", 0) == 0);

  const Run lp = run({"export-lp", "-k", "6"});
  CHECK(lp.code == kExitOk);
  CHECK(lp.out == to_lp(build_instance(6)));
  std::filesystem::remove_all(dir);
}

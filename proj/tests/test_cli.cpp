#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "linkred/cli.hpp"
#include "support.hpp"

using namespace linkred;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string five_vertex_path() { return std::string(FIXTURE_DIR) + "/five_vertex.json"; }

}  // namespace

TEST_CASE("reduce bundles the instance") {
  const auto r = run({"reduce", "--graph", five_vertex_path()});
  REQUIRE(r.code == cli::kSuccess);
  const auto j = json::parse(r.out);
  CHECK(j["braid"]["letters"].size() == 20);
  CHECK(j["diagram"]["crossings"].size() == 20);
  CHECK(j["k"].is_null());
}

TEST_CASE("solve uses both routes") {
  auto r = run({"solve", "--graph", five_vertex_path(), "-k", "3"});
  CHECK(r.code == cli::kSuccess);
  auto j = json::parse(r.out);
  CHECK(j["answer"] == "YES");
  CHECK(j["agree"] == true);
  CHECK(j["link_route"]["witness"] == json{1, 3, 5});
  CHECK(j["oracle_route"]["witness"] == json{1, 3, 5});

  r = run({"solve", "--graph", five_vertex_path(), "-k", "4"});
  CHECK(r.code == cli::kNo);
  j = json::parse(r.out);
  CHECK(j["answer"] == "NO");
  CHECK(j["agree"] == true);

  r = run({"solve", "--graph", five_vertex_path(), "-k", "3", "--format", "text"});
  CHECK(r.out.rfind("YES witness {1,3,5}", 0) == 0);
}

TEST_CASE("verify, sublink, simplify") {
  auto r = run({"verify", "--graph", five_vertex_path()});
  CHECK(r.code == cli::kSuccess);
  CHECK(json::parse(r.out)["holds"] == true);

  r = run({"sublink", "--graph", five_vertex_path(), "--subset", "1,3,5"});
  CHECK(r.code == cli::kSuccess);
  auto j = json::parse(r.out);
  CHECK(j["trivial"] == "TRUE");
  CHECK(j["peel_order"] == json{1, 3, 5});
  CHECK(j["certificate"] == json{1, 3, 5});

  r = run({"sublink", "--graph", five_vertex_path(), "--subset", "[2,4]"});
  CHECK(r.code == cli::kNo);
  CHECK(json::parse(r.out)["failure_residual"] == json{2, 4});

  r = run({"simplify", "--graph", five_vertex_path(), "--subset", "1,3,5", "--format", "text"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "6 -> 0 crossings, 3 free loops\n");

  r = run({"simplify", "--braid", R"({"strands":2,"letters":[1,-1]})"});
  CHECK(r.code == cli::kSuccess);
  CHECK(json::parse(r.out)["free_loops"] == 2);

  r = run({"simplify", "--diagram", std::string(FIXTURE_DIR) + "/hopf.json", "--format", "text"});
  CHECK(r.out == "2 -> 2 crossings, 0 free loops\n");
}

TEST_CASE("render writes svg") {
  const auto path = std::filesystem::temp_directory_path() / "linkred_cli_render.svg";
  auto r = run({"render", "--graph", five_vertex_path(), "--subset", "1,3,5", "--out", path.string()});
  REQUIRE(r.code == cli::kSuccess);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str().find("</svg>") != std::string::npos);
  CHECK(buf.str().find("dimmed") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("oracle check") {
  auto r = run({"oracle-check", "--max-n", "4", "--format", "text"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  auto r = run({"solve", "--graph", five_vertex_path()});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("-k") != std::string::npos);
  r = run({"reduce", "--graph", "/nonexistent.json"});
  CHECK(r.code == cli::kUsage);
  CHECK(r.err.find("--graph") != std::string::npos);
  r = run({"sublink", "--graph", five_vertex_path(), "--subset", "1,x"});
  CHECK(r.code == cli::kUsage);
  CHECK(run({"reduce", "--graph", R"({"n":2,"adj":[[0,1],[0,0]]})"}).code == cli::kUsage);
  CHECK(run({"reduce", "--graph", five_vertex_path(), "--format", "pdf"}).code == cli::kUsage);
}

TEST_CASE("commands are deterministic") {
  const auto a = run({"reduce", "--graph", five_vertex_path()});
  const auto b = run({"reduce", "--graph", five_vertex_path()});
  CHECK(a.out == b.out);
}

#include <doctest.h>

#include "cellkit/cli.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using cellkit::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("qh-check verdicts and exit codes") {
  Result r = call({"qh-check", "--algebra", "schur:2,2", "--ring", "F2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "det C = 1"));
  CHECK(has(r.out, "cell order"));

  r = call({"qh-check", "--algebra", "tl:2,0", "--ring", "Q"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "phi_0 vanishes"));
}

TEST_CASE("gldim over Z") {
  Result r = call({"gldim", "--algebra", "schur:2,2", "--ring", "Z"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "gldim = 3"));
  r = call({"gldim", "--algebra", "schur:2,2", "--ring", "Z", "--json"});
  CHECK(nlohmann::json::parse(r.out).at("gldim") == 3);
}

TEST_CASE("gldim outside the closed form falls back to the chain bound") {
  Result r = call({"gldim", "--algebra", "schur:2,3", "--ring", "F2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "gldim <= 2"));
  CHECK(has(r.out, "n >= d"));
}

TEST_CASE("findim") {
  Result r = call({"findim", "--algebra", "schur:2,2", "--ring", "Zm:6"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "findim = 2"));
  CHECK(call({"findim", "--algebra", "tl:2,1"}).code == 2);
}

TEST_CASE("bad primes") {
  Result r = call({"bad-primes", "--algebra", "tl:2,2"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "{2}"));
  CHECK(call({"bad-primes", "--algebra", "schur:2,2"}).code == 0);
  CHECK(call({"bad-primes", "--algebra", "tl:2,2", "--ring", "Q"}).code == 2);
}

TEST_CASE("field-only commands need a field") {
  CHECK(call({"simples", "--algebra", "tl:3,1"}).code == 2);
  CHECK(call({"cartan", "--algebra", "tl:3,1", "--ring", "Zm:6"}).code == 2);
  Result r = call({"cartan", "--algebra", "tl:2,0", "--ring", "Q"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "det C = 2"));
  r = call({"decomp", "--algebra", "tl:2,0", "--ring", "Q", "--json"});
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("matrix") == nlohmann::json::parse("[[1],[1]]"));
  r = call({"simples", "--algebra", "schur:2,2", "--ring", "F2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "2 simple module(s)"));
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"info"}).code == 2);
  CHECK(call({"info", "--algebra", "schur:2"}).code == 2);
  CHECK(call({"info", "--algebra", "/nonexistent.json"}).code == 2);
  CHECK(call({"qh-check", "--algebra", "tl:2,1", "--ring", "R"}).code == 2);
  CHECK(call({"gram", "--algebra", "tl:3,1", "--lambda", "7"}).code == 2);
  CHECK(call({"info", "--algebra", "schur:4,7", "--limit", "100"}).code == 2);
}

TEST_CASE("validate, info and gram") {
  Result r = call({"validate", "--algebra", "tl:4,2", "--ring", "F3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "cell datum: ok"));
  r = call({"info", "--algebra", "tl:4,1"});
  CHECK(has(r.out, "dim: 14"));
  r = call({"gram", "--algebra", "tl:3,2", "--lambda", "1", "--strict", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)[0].at("gram") == nlohmann::json::parse("[[2,1],[1,2]]"));
}

TEST_CASE("json output is stable") {
  const std::vector<std::string> args{"qh-check", "--algebra", "schur:3,2", "--ring", "Z", "--json"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("export round trip through files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "cellkit_cli_test";
  fs::create_directories(dir);
  for (const char* family : {"schur:2,2", "tl:3,1"}) {
    const std::string first = (dir / "first.json").string(), second = (dir / "second.json").string();
    CHECK(call({"export", "--algebra", family, "--output", first}).code == 0);
    CHECK(call({"export", "--algebra", first, "--output", second}).code == 0);
    CHECK(slurp(first) == slurp(second));
    CHECK(call({"validate", "--algebra", second}).code == 0);
  }
  fs::remove_all(dir);
}

TEST_CASE("validate reports a tampered spec file") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "cellkit_tampered.json";
  std::ostringstream out, err;
  REQUIRE(run({"export", "--algebra", "tl:2,0"}, out, err) == 0);
  std::string text = out.str();
  // C_{(),()} C_{(),()} = identity pushes a cell-0 product into cell 2
  const std::string line = "    [0,1,[[0,1,1]]],\n";
  const auto at = text.find(line);
  REQUIRE(at != std::string::npos);
  text.insert(at, "    [0,0,[[1,1,1]]],\n");
  std::ofstream(path, std::ios::binary) << text;
  Result r = call({"validate", "--algebra", path.string()});
  CHECK(r.code == 1);
  CHECK(has(r.out, "[C3]"));
  fs::remove(path);
}

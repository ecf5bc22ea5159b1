#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "designcodes/cache.hpp"
#include "designcodes/cli.hpp"
#include "designcodes/constructions.hpp"
#include "designcodes/verifier.hpp"

using namespace dcodes;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "designcodes");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "designcodes_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch(name);
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("code text round trip") {
  for (const auto& c : {simplex(3, 3), grm(4, 2, 2), LinearCode::zero(Field::of_order(5), 4)}) {
    const auto back = code_from_text(code_to_text(c));
    CHECK(back == c);
    CHECK(back.n() == c.n());
  }
  CHECK_THROWS_AS(code_from_text("2 3 1\n1 2 0\n"), OutOfRange);
  CHECK_THROWS_AS(code_from_text("2 3 2\n1 1 0\n"), BadParams);
  CHECK_THROWS_AS(code_from_text("2 3"), BadParams);
}

TEST_CASE("wd on a hand-written even-weight code") {
  const auto file = write("even.code", "2 3 2\n1 1 0\n0 1 1\n");
  const auto r = call({"--json", "wd", file});
  CHECK(r.code == kAllPass);
  const auto j = Json::parse(r.out);
  CHECK(j["counts"] == Json::array({"1", "0", "3", "0"}));
  const auto text = call({"wd", file});
  CHECK(text.out.find("2 3\n") != std::string::npos);
}

TEST_CASE("budget refusal exits 3 with a reason") {
  const auto file = write("simplex.code", code_to_text(simplex(2, 4)));
  const auto r = call({"wd", file, "--budget", "4", "--json"});
  CHECK(r.code == kBudget);
  const auto j = Json::parse(r.out);
  CHECK(j["reason"] == "budget_exceeded");
  CHECK(j["min_work"] == "16");
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == kUsage);
  CHECK(call({"nonsense"}).code == kUsage);
  CHECK(call({"verify", "T20", "--q", "3"}).code == kUsage);
  CHECK(call({"construct", "grm", "2"}).code == kUsage);
  CHECK(call({"table", "3"}).code == kUsage);
  CHECK(call({"wd", scratch("missing.code").string()}).code == kUsage);
}

TEST_CASE("construct, design and designcode chain") {
  const auto c = call({"construct", "simplex", "2", "3"});
  REQUIRE(c.code == kAllPass);
  CHECK(code_from_text(c.out) == simplex(2, 3));
  const auto code_file = write("s23.code", c.out);

  const auto d = call({"design", code_file, "--weight", "4", "--t", "2", "--json"});
  CHECK(d.code == kAllPass);
  const auto summary = Json::parse(d.out);
  CHECK(summary["b"] == 7);
  CHECK(summary["lambda"] == "2");

  const auto des = call({"design", code_file, "--weight", "4"});
  const auto des_file = write("s23.des", des.out);
  const auto dc = call({"--json", "designcode", des_file, "--p", "2"});
  CHECK(Json::parse(dc.out)["k"] == 3);

  const auto pg = call({"construct", "pg", "2", "3", "1"});
  CHECK(design_from_text(pg.out).b() == 7);
}

TEST_CASE("am, verify, conjecture and sweep exit codes") {
  const auto file = write("s23b.code", code_to_text(simplex(2, 3)));
  const auto am = call({"am", file, "--t", "2", "--json"});
  CHECK(am.code == kAllPass);
  CHECK(Json::parse(am.out)["s_count"] == 2);
  CHECK(call({"am", file, "--t", "4"}).code == kCheckFailed);

  const auto v = call({"verify", "T33", "--m", "2"});
  CHECK(v.code == kAllPass);
  CHECK(v.out.find("pass") != std::string::npos);

  // T25 fails over GF(4): the code of the lines of AG(3,4) is smaller than
  // the extended M^3 code.
  CHECK(call({"verify", "T25", "--q", "4", "--m", "3", "--r", "1"}).code == kCheckFailed);
  CHECK(call({"verify", "T24", "--q", "2", "--m", "7", "--t", "3", "--budget", "16"}).code == kBudget);

  CHECK(call({"conjecture", "C1", "4,2"}).code == kAllPass);
  CHECK(call({"conjecture", "C1", "4:2"}).code == kUsage);
  const auto s = call({"--json", "sweep", "2", "1", "3"});
  CHECK(s.code == kAllPass);
  CHECK(Json::parse(s.out).size() == 1);
}

TEST_CASE("cache hits reproduce the output") {
  const auto dir = scratch("cache");
  std::filesystem::remove_all(dir);
  const auto file = write("g.code", code_to_text(grm(3, 2, 3)));
  const auto first = call({"--json", "--cache-dir", dir.string(), "wd", file});
  const auto second = call({"--json", "--cache-dir", dir.string(), "wd", file});
  const auto plain = call({"--json", "wd", file});
  CHECK(first.out == second.out);
  CHECK(first.out == plain.out);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), {}) == 1);

  Cache cache(dir);
  CHECK(!cache.get("absent"));
  cache.put("k", "v");
  CHECK(cache.get("k") == "v");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mrcube/cli.hpp"
#include "oracles.hpp"

using namespace mrcube;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / "mrcube_test_cli") {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string operator()(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("parse_names") {
  CHECK(cli::parse_names("1,3") == std::vector<int>{1, 3});
  CHECK(cli::parse_names("{1, 3}") == std::vector<int>{1, 3});
  CHECK(cli::parse_names("").empty());
  CHECK_THROWS_AS(cli::parse_names("1,x"), format_error);
}

TEST_CASE("gen then check") {
  TempDir tmp;
  REQUIRE(run({"gen", "signed", "--n", "2", "-o", tmp("s2.json")}).code == 0);
  for (const char* suite : {"cubic", "mr", "caret", "caret-extra", "thm-mr", "p-freedom"}) {
    const auto r = run({"check", suite, tmp("s2.json")});
    INFO(suite << "\n" << r.out << r.err);
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  REQUIRE(run({"gen", "interval", "--n", "2", "--table", "-o", tmp("i2.json")}).code == 0);
  CHECK(load_structure(read_json_file(tmp("i2.json"))).size() == 9);
  REQUIRE(run({"gen", "filter", "--n", "3", "--f", "1,3", "-o", tmp("f.json")}).code == 0);
  CHECK(load_structure(read_json_file(tmp("f.json"))).size() == 3);

  const auto j = run({"check", "cubic", tmp("s2.json"), "--json"});
  CHECK(j.code == 0);
  CHECK(json::parse(j.out).is_array());
}

TEST_CASE("violations exit 1 with a counterexample") {
  TempDir tmp;
  const auto& s = make_signed_model(Universe(2)).structure;
  Elem x = 0;
  while (x == s.one() || !s.leq(x, s.one())) ++x;
  const Elem wrong = s.delta(s.one(), x) == s.one() ? x : s.one();
  write_text_file(tmp("bad.json"), dump(to_json(oracle::with_delta(s, s.one(), x, wrong))));
  const auto r = run({"check", "cubic", tmp("bad.json")});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  CHECK(r.out.find("instances) (") != std::string::npos);

  write_text_file(tmp("diamond.json"), dump(to_json(make_diamond_minus_bottom())));
  CHECK(run({"check", "mr", tmp("diamond.json")}).code == 1);
  CHECK(run({"check", "caret", tmp("diamond.json")}).code == 1);
  CHECK(run({"reconstruct", tmp("diamond.json"), "-o", tmp("r.json")}).code == 2);
}

TEST_CASE("bad input exits 2") {
  TempDir tmp;
  write_text_file(tmp("junk.json"), "{ not json");
  const auto r = run({"check", "mr", tmp("junk.json")});
  CHECK(r.code == 2);
  CHECK(r.err.rfind("error:", 0) == 0);
  CHECK(run({"check", "mr", tmp("missing.json")}).code == 2);
  CHECK(run({"check", "bogus-suite", tmp("junk.json")}).code == 2);
  CHECK(run({"gen", "signed", "--n", "2", "-o", tmp("x.json"), "--bogus"}).code == 2);
  CHECK(run({"gen", "signed", "--n", "9", "-o", tmp("x.json")}).code == 2);
  CHECK(run({"gen", "filter", "--n", "2", "-o", tmp("x.json")}).code == 2);
  CHECK(run({"gen", "filter", "--n", "2", "--f", "5", "-o", tmp("x.json")}).code == 2);
  CHECK(run({"gen", "signed", "--n", "2", "--f", "1", "-o", tmp("x.json")}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"search", "--max-size", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("search prints models and a summary") {
  const auto r = run({"search", "--max-size", "3", "--extra"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line, last;
  int models = 0;
  while (std::getline(lines, line)) {
    if (!line.empty() && line[0] == '{') {
      const json j = json::parse(line);
      CHECK(load_structure(j["model"]).size() == j["size"].get<std::size_t>());
      ++models;
    }
    last = line;
  }
  CHECK(models == 2);
  CHECK(last == "1:1 2:0 3:1");
  CHECK(run({"search", "--max-size", "3", "--parallel"}).out.find("1:1 2:0 3:1") !=
        std::string::npos);
}

TEST_CASE("collapse, reconstruct and export-dot") {
  TempDir tmp;
  REQUIRE(run({"gen", "interval", "--n", "2", "-o", tmp("i2.json")}).code == 0);

  const auto c = run({"collapse", tmp("i2.json"), "-o", tmp("q.json")});
  CHECK(c.code == 0);
  CHECK(c.out.rfind("4 classes", 0) == 0);
  CHECK(read_json_file(tmp("q.json"))["classes"].size() == 4);

  const auto r = run({"reconstruct", tmp("i2.json"), "-o", tmp("r.json"), "--all-vertices"});
  CHECK(r.code == 0);
  CHECK(r.out == "dimension 2, 9 elements\n");
  CHECK(read_json_file(tmp("r.json")).size() == 9);

  CHECK(run({"export-dot", tmp("i2.json"), "-o", tmp("a.dot")}).code == 0);
  CHECK(run({"export-dot", tmp("i2.json"), "-o", tmp("b.dot"), "--quotient"}).code == 0);
  std::ifstream a(tmp("a.dot")), b(tmp("b.dot"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str().rfind("digraph structure", 0) == 0);
  CHECK(sb.str().rfind("digraph quotient", 0) == 0);
}

TEST_CASE("compose") {
  for (const char* n : {"0", "1", "2"}) {
    const auto r = run({"compose", "--n", n});
    INFO(r.out);
    CHECK(r.code == 0);
    CHECK(r.out.find(" 0 failures") != std::string::npos);
  }
  CHECK(run({"compose", "--n", "2"}).out.find("81 pairs, 0 failures") != std::string::npos);
  CHECK(run({"compose", "--n", "5"}).code == 2);
}

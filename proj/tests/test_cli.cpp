#include "cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sigidx::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string golden(const std::string& name) { return read_file(std::string(SIGIDX_GOLDEN_DIR) + "/" + name); }

const std::vector<std::vector<std::string>> kJsonCommands = {
    {"indices", "--family", "path:5"},
    {"indices", "--sequence", "3,1,1,1"},
    {"sequence", "analyze", "--sequence", "3,5,7,5,6,8,10", "--convention", "paper-table"},
    {"sequence", "analyze", "--family", "double_star:3,4"},
    {"bounds", "check", "--table-row", "1:1", "--bound", "all"},
    {"bounds", "check", "--family", "star:7", "--bound", "all", "--eta1", "5/2"},
    {"bounds", "check", "--all-trees", "7"},
    {"bounds", "falsify", "--bound", "B8", "--nmax", "6"},
    {"bounds", "falsify", "--bound", "B12", "--n", "10", "--samples", "40", "--seed", "9"},
    {"enumerate", "--n", "7"},
    {"enumerate", "--n", "12", "--count-only"},
    {"extremal", "--objective", "sigma", "--direction", "max", "--n", "9"},
    {"extremal", "--objective", "albertson", "--direction", "min", "--degrees", "3,3,1,1,1,1"},
    {"tables", "reproduce", "--table", "1"},
    {"tables", "reproduce", "--table", "2"},
    {"tables", "show", "--table", "2"},
    {"stats", "correlate", "--table", "1"},
    {"stats", "correlate", "--table", "2"},
    {"stats", "regress", "--table", "1", "--predict", "350,50"},
    {"stats", "regress", "--table", "2"},
    {"plots", "emit", "--figure", "1"},
    {"plots", "emit", "--figure", "3"},
    {"forms"},
};

}  // namespace

TEST_CASE("golden outputs") {
  CHECK(run({"indices", "--family", "path:5", "--format", "json"}).out == golden("indices_path5.json"));
  CHECK(run({"tables", "reproduce", "--table", "1", "--format", "csv"}).out == golden("table1.csv"));
  CHECK(run({"bounds", "falsify", "--bound", "B8", "--nmax", "6", "--format", "csv"}).out ==
        golden("falsify_b8.csv"));
  CHECK(run({"enumerate", "--n", "6"}).out == golden("enumerate6.txt"));
  CHECK(run({"plots", "emit", "--figure", "2"}).out == golden("figure2.csv"));
}

TEST_CASE("indices example") {
  const auto r = run({"indices", "--family", "path:5", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["albertson"] == 2);
  CHECK(j["sigma"] == 2);
  CHECK(j["sigma_t"] == 6);
}

TEST_CASE("JSON output is canonical and round trips") {
  for (const auto& args : kJsonCommands) {
    auto with_format = args;
    with_format.insert(with_format.end(), {"--format", "json"});
    const auto r = run(with_format);
    INFO(with_format.front() << " " << (with_format.size() > 1 ? with_format[1] : ""));
    REQUIRE(r.code == 0);
    const auto parsed = nlohmann::json::parse(r.out);
    CHECK(parsed.dump(2) + "\n" == r.out);
  }
}

TEST_CASE("identical arguments give byte-identical output in every format") {
  for (const auto& args : kJsonCommands)
    for (const char* format : {"human", "csv", "json"}) {
      auto full = args;
      full.insert(full.end(), {"--format", format});
      const auto a = run(full);
      const auto b = run(full);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
    }
}

TEST_CASE("exit codes") {
  SUBCASE("expected hold that fails exits 2") {
    const auto r = run({"bounds", "check", "--family", "path:6", "--bound", "B8", "--expect-hold"});
    CHECK(r.code == 2);
  }
  SUBCASE("expected hold that holds exits 0") {
    CHECK(run({"bounds", "check", "--table-row", "1:1", "--bound", "B7", "--expect-hold"}).code == 0);
  }
  SUBCASE("non-probative failures do not trip --expect-hold") {
    // B8 is tree-gated; a cycle is not a tree.
    CHECK(run({"bounds", "check", "--family", "cycle:6", "--bound", "B8", "--expect-hold"}).code == 0);
  }
  SUBCASE("domain and input errors exit 1 with a one-line message") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"indices", "--sequence", "1,x,2"},
             {"indices", "--graph", "/nonexistent/file.txt"},
             {"enumerate", "--n", "40"},
             {"indices", "--family", "path:5", "--sequence", "1,1"},
             {"indices"},
             {"bounds", "check", "--sequence", "1,1", "--bound", "B7"},
             {"bounds", "check", "--family", "path:5", "--bound", "B77"},
             {"bounds", "check", "--family", "path:5", "--p", "4"},
             {"bounds", "falsify", "--bound", "B8"},
             {"extremal", "--n", "5", "--max-degree", "9"},
             {"sequence", "analyze", "--sequence", "5,5", "--convention", "sideways"},
         }) {
      const auto r = run(args);
      INFO(args.front());
      CHECK(r.code == 1);
      CHECK_FALSE(r.err.empty());
      if (r.err.rfind("error: ", 0) == 0) CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
  }
  SUBCASE("unknown flags are rejected") {
    CHECK(run({"indices", "--family", "path:5", "--colour", "red"}).code == 1);
  }
  SUBCASE("cap message names the override") {
    const auto r = run({"enumerate", "--n", "25", "--count-only"});
    CHECK(r.code == 1);
    CHECK(r.err.find("SIGIDX_ENUM_CAP") != std::string::npos);
  }
  SUBCASE("help exits 0") { CHECK(run({"--help"}).code == 0); }
}

TEST_CASE("environment cap override") {
  ::setenv("SIGIDX_ENUM_CAP", "19", 1);
  const auto r = run({"enumerate", "--n", "19", "--count-only", "--format", "json"});
  ::unsetenv("SIGIDX_ENUM_CAP");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["count"] == 317955);
  CHECK(run({"enumerate", "--n", "19", "--count-only", "--cap", "19"}).code == 0);
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = std::string(SIGIDX_SCRATCH_DIR) + "/cli_out.csv";
  const auto to_file = run({"tables", "reproduce", "--table", "2", "--format", "csv", "--out", path});
  REQUIRE(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(read_file(path) == run({"tables", "reproduce", "--table", "2", "--format", "csv"}).out);
}

TEST_CASE("graph file input") {
  const std::string path = std::string(SIGIDX_SCRATCH_DIR) + "/star.edges";
  {
    std::ofstream f(path);
    f << "# n=5\n0 1\n0 2\n0 3\n0 4\n";
  }
  const auto r = run({"indices", "--graph", path, "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["sigma"] == 36);

  {
    std::ofstream f(path);
    f << "0 1\n1 1\n";
  }
  const auto bad = run({"indices", "--graph", path});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("falsify output carries the path counterexample") {
  const auto r = run({"bounds", "falsify", "--bound", "B8", "--nmax", "6", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& c : j["counterexamples"])
    if (c["encoding"] == "0 1 2 3 1 2") {
      found = true;
      CHECK(c["report"]["rhs"]["value"] == "336/5");
    }
  CHECK(found);
}

TEST_CASE("plot series") {
  const auto r = run({"plots", "emit", "--figure", "1", "--nmax", "8"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("n,irr_path,sigma_path,irr_star,sigma_star", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 5);
  CHECK(run({"plots", "emit", "--figure", "4"}).code == 1);
}

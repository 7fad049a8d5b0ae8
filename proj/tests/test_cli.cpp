#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "gstirling/cli.hpp"

using namespace gstirling;
using nlohmann::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word subcommand plain views") {
  CHECK(run({"word", "xxDxxDxDDD", "--board"}).out == "(1,3) (1,4) (1,5) (2,5)\n");
  CHECK(run({"word", "xxDxxDxDDD", "--below"}).out ==
        "(1,2) (2,3) (2,4) (3,4) (3,5) (4,5)\n");
  CHECK(run({"word", "xD", "--turns"}).out == "(1,1)\n");
  CHECK(run({"word", "xDxD"}).out == "n=2 word=xDxD\n");

  const CliResult bad = run({"word", "xDDx"});
  CHECK(bad.code == kExitDisagreement + 1);  // exit 2: input error
  CHECK(bad.err.find("prefix violation at position 3") != std::string::npos);
}

TEST_CASE("word subcommand json view") {
  const CliResult r = run({"word", "xxDxxDxDDD", "--board", "--graph", "--json"});
  REQUIRE(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["n"] == 5);
  CHECK(j["board"]["n"] == 5);
  CHECK(j["board"]["heights"] == json::array({3, 1, 0, 0, 0}));
  CHECK(j["board"]["squares"] == json::parse("[[1,3],[1,4],[1,5],[2,5]]"));
  CHECK(j["graph"]["n"] == 5);
}

TEST_CASE("stirling subcommand methods and inputs") {
  const CliResult rook = run({"stirling", "--word", "xxDxxDxDDD", "--method", "rook"});
  REQUIRE(rook.code == kExitOk);
  const json j = json::parse(rook.out);
  CHECK(j["method"] == "rook");
  CHECK(j["values"] == json::parse(R"(["0","0","0","2","4","1"])"));

  const CliResult enum3 = run({"stirling", "--family", "empty:3", "--method", "enumerate"});
  CHECK(json::parse(enum3.out)["values"] == json::parse(R"(["0","1","3","1"])"));

  // Every method agrees through the CLI on a word input.
  std::string reference;
  for (const std::string& m : {"enumerate", "weyl", "rook", "matching", "chromatic", "auto"}) {
    const CliResult r = run({"stirling", "--word", "xxDxDxDD", "--method", m});
    REQUIRE(r.code == kExitOk);
    const std::string values = json::parse(r.out)["values"].dump();
    if (reference.empty()) {
      reference = values;
    } else {
      CHECK(values == reference);
    }
  }
}

TEST_CASE("stirling graph input: P_4 rejected for word methods, auto falls back") {
  const std::string path = "cli_p4.edges";
  {
    std::ofstream f(path);
    f << "n 4\n1 2\n2 3\n3 4\n";
  }
  const CliResult rook = run({"stirling", "--graph", path, "--method", "rook"});
  CHECK(rook.code == kExitDomain);

  const CliResult autod = run({"stirling", "--graph", path, "--method", "auto"});
  REQUIRE(autod.code == kExitOk);
  // P_4 is a tree: chromatic route gives the same counts as enumeration.
  const CliResult enumd = run({"stirling", "--graph", path, "--method", "enumerate"});
  CHECK(json::parse(autod.out)["values"] == json::parse(enumd.out)["values"]);

  std::remove(path.c_str());
}

TEST_CASE("stirling cap exceeded exits 3") {
  const CliResult r = run({"stirling", "--family", "empty:20", "--method", "enumerate"});
  CHECK(r.code == kExitCap);
}

TEST_CASE("crosscheck subcommand") {
  CHECK(run({"crosscheck", "--word", "xxDxxDxDDD"}).code == kExitOk);
  const CliResult ex = run({"crosscheck", "--exhaustive", "5"});
  CHECK(ex.code == kExitOk);
  CHECK(ex.out.find("checked 64 words") != std::string::npos);

  const CliResult rnd = run({"crosscheck", "--random", "25", "--nmax", "9", "--seed", "7"});
  CHECK(rnd.code == kExitOk);

  // Determinism: identical flags, identical output.
  CHECK(run({"crosscheck", "--random", "10", "--nmax", "8", "--seed", "3"}).out ==
        run({"crosscheck", "--random", "10", "--nmax", "8", "--seed", "3"}).out);
}

TEST_CASE("family subcommand emits words and graphs") {
  CHECK(run({"family", "empty:3", "--emit", "word"}).out == "xDxDxD\n");
  CHECK(run({"family", "star:5", "--emit", "word"}).out == "xxDxDxDxDD\n");
  CHECK(run({"family", "bogus:3"}).code == kExitInput);
  CHECK(run({"family", "path:6", "--emit", "word"}).code == kExitDomain);

  const CliResult forest = run({"family", "forest:6", "--components", "2", "--seed", "9"});
  REQUIRE(forest.code == kExitOk);
  CHECK(forest.out.substr(0, 4) == "n 6\n");
  // 6 vertices, 2 components, acyclic: exactly 4 edges.
  CHECK(std::count(forest.out.begin(),forest.out.end(), '\n') == 5);
  CHECK(run({"family", "forest:6", "--components", "2", "--seed", "9"}).out == forest.out);
}

TEST_CASE("normality subcommand sweeps and CSV round trip") {
  const std::string csv_path = "cli_sweep.csv";
  const CliResult r = run({"normality", "--family", "empty", "--sweep", "10,20", "--csv",
                           csv_path});
  REQUIRE(r.code == kExitOk);

  std::istringstream lines(r.out);
  std::string line;
  std::vector<json> rows;
  while (std::getline(lines, line)) rows.push_back(json::parse(line));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["n"] == 10);
  CHECK(rows[1]["n"] == 20);
  CHECK(rows[0]["kahn"]["chi"] == 1);
  CHECK(rows[0]["report"]["real_rooted"] == "verified");

  std::ifstream csv(csv_path);
  REQUIRE(csv.good());
  std::string header;
  std::getline(csv, header);
  CHECK(header == "n,f,chi,g,mean,variance,kolmogorov,real_rooted,ratio");
  std::string row;
  std::getline(csv, row);
  std::istringstream cells(row);
  std::vector<std::string> cell;
  std::string c;
  while (std::getline(cells, c, ',')) cell.push_back(c);
  REQUIRE(cell.size() == 9);
  CHECK(cell[0] == "10");
  CHECK(cell[1] == "10");
  CHECK(cell[2] == "1");
  CHECK(cell[3] == "1/10");
  // CSV floats reproduce the JSON values to the printed 10 digits.
  CHECK(std::stod(cell[6]) ==
        doctest::Approx(rows[0]["report"]["kolmogorov"].get<double>()).epsilon(1e-9));
  CHECK(cell[7] == "verified");
  CHECK(cell[8] == "1/1");
  std::remove(csv_path.c_str());
}

TEST_CASE("normality degenerate rows are flagged, not fatal") {
  const CliResult r = run({"normality", "--family", "complete", "--sweep", "6"});
  REQUIRE(r.code == kExitOk);
  const json row = json::parse(r.out.substr(0, r.out.find('\n')));
  CHECK(row["report"]["kolmogorov"].is_null());
}

TEST_CASE("forest normality row matches the documented example") {
  const CliResult r = run({"normality", "--family", "forest", "--components", "2", "--sweep",
                           "20"});
  REQUIRE(r.code == kExitOk);
  const json row = json::parse(r.out.substr(0, r.out.find('\n')));
  CHECK(row["kahn"]["chi"] == 2);
  CHECK(row["kahn"]["g"] == "1/10");
}

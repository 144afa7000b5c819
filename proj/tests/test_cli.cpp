#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs a shell command line inside a scratch directory with stderr dropped.
Run run(const std::string& args) {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "encov_test_cli";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  const std::string cmd = "cd '" + dir.string() + "' && '" ENCOV_CLI "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (std::size_t k; (k = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, k);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(ENCOV_SOURCE_DIR) + "/tests/data/" + name; }

std::string with_data_paths(std::string line) {
  const std::string rel = "tests/data/";
  for (std::size_t at; (at = line.find(rel)) != std::string::npos && (at == 0 || line[at - 1] == ' ');)
    line.replace(at, rel.size(), std::string(ENCOV_SOURCE_DIR) + "/tests/data/");
  return line;
}

}  // namespace

TEST_CASE("every README example exits 0") {
  std::ifstream readme(std::string(ENCOV_SOURCE_DIR) + "/README.md");
  REQUIRE(readme);
  const std::string prefix = "build/tools/encov ";
  int examples = 0;
  for (std::string line; std::getline(readme, line);) {
    if (!line.starts_with(prefix)) continue;
    ++examples;
    const std::string args = with_data_paths(line.substr(prefix.size()));
    CAPTURE(line);
    const Run r = run(args);
    CHECK(r.status == 0);
    CHECK_FALSE(r.out.empty());
  }
  CHECK(examples >= 10);
}

TEST_CASE("documented outputs") {
  const auto wheel = nlohmann::json::parse(run("check --family 'wheel(1,3)'").out);
  CHECK(wheel["energy"].get<double>() == doctest::Approx(6.0));
  CHECK(wheel["tau"] == 3);
  CHECK(wheel["equality_tau"] == true);

  const auto k3 = nlohmann::json::parse(run("invariants --graph6 Bw").out);
  CHECK(k3["n"] == 3);
  CHECK(k3["m"] == 3);
  CHECK(k3["tau"] == 2);
  CHECK(k3["mu"] == 1);
  CHECK(k3["omega"] == 3);
  CHECK(k3["c"] == 1);

  const Run scan = run("scan --enumerate 6 --connected --filter split --check tau");
  CHECK(scan.status == 0);
  const auto summary = nlohmann::json::parse(scan.out);
  CHECK(summary["violation_count"] == 0);
  CHECK(summary["graphs_scanned"].get<int>() > 0);

  const Run csv = run("check --family 'cycle(5)' --format csv");
  CHECK(csv.out.starts_with("graph_id,n,m,energy,tau"));
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);
}

TEST_CASE("seeded generation is reproducible") {
  const std::string cmd = "family --random-split 12 --clique-fraction 0.4 --edge-prob 0.5 --seed 99";
  CHECK(run(cmd).out == run(cmd).out);
  CHECK(run(cmd).out != run("family --random-split 12 --clique-fraction 0.4 --edge-prob 0.5 --seed 98").out);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("check").status == 2);
  CHECK(run("check --graph6 Bw --family 'cycle(4)'").status == 2);
  CHECK(run("energy --nonsense").status == 2);
  CHECK(run("scan --enumerate 5 --input x.g6").status == 2);
  CHECK(run("scan --enumerate 5 --check bogus").status == 2);
  CHECK(run("decompose nonsense --family 'cycle(4)'").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_CASE("rejected input exits 3") {
  CHECK(run("energy --graph6 'C!!'").status == 3);
  CHECK(run("energy --family 'cycle(2)'").status == 3);
  CHECK(run("energy --family 'nonsense(3)'").status == 3);
  CHECK(run("classify --edges /nonexistent/file").status == 3);
  CHECK(run("decompose split-cliques --edges '" + data("bowtie.edges") + "'").status == 3);
  CHECK(run("decompose block-tree --graph6 Ag").status == 3);
  CHECK(run("scan --enumerate 9").status == 3);
}

TEST_CASE("strict mode exits 1 on a violated bound") {
  CHECK(run("check --strict --family 'cycle(7)'").status == 0);
  CHECK(run("scan --strict --enumerate 5").status == 0);
  REQUIRE(run("scan --enumerate 4 --connected --out good.jsonl").status == 0);
  CHECK(run("report --strict --input good.jsonl").status == 0);
  // a fabricated report row claiming a bipartite graph below the tau bound
  {
    std::ofstream bad(fs::temp_directory_path() / "encov_test_cli" / "bad.csv");
    bad << "graph_id,n,m,energy,tau,mu,c,omega,class_tags,slack_tau,slack_wang_ma,slack_matching,equality_tau,"
           "guaranteed_by\n";
    bad << "C],4,4,3.5,2,2,0,2,bipartite|cycle,-0.5,-0.5,-0.5,false,bipartite|cycle|cover-two|wang-ma|matching\n";
  }
  CHECK(run("report --input bad.csv --format csv").status == 0);
  CHECK(run("report --strict --input bad.csv --format csv").status == 1);
}

TEST_CASE("resume through the CLI matches an uninterrupted run") {
  REQUIRE(run("scan --enumerate 6 --jobs 3 --out full.jsonl").status == 0);
  REQUIRE(run("scan --enumerate 6 --jobs 1 --out part.jsonl").status == 0);
  const fs::path dir = fs::temp_directory_path() / "encov_test_cli";
  auto slurp = [&](const char* name) {
    std::ifstream in(dir / name, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  std::string text = slurp("part.jsonl");
  text.resize(text.size() / 2);
  std::ofstream(dir / "part.jsonl", std::ios::binary | std::ios::trunc) << text;
  CHECK(run("scan --enumerate 6 --jobs 2 --out part.jsonl --resume").status == 0);
  CHECK(slurp("part.jsonl") == slurp("full.jsonl"));
  CHECK(run("scan --enumerate 6 --resume").status == 2);
}

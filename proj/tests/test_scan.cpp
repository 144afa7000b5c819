#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "encov/canonical.hpp"
#include "encov/error.hpp"
#include "encov/families.hpp"
#include "encov/graph6.hpp"
#include "encov/scan.hpp"
#include "json.hpp"

using namespace encov;
namespace fs = std::filesystem;

namespace {

std::string id_of(const std::string& family) { return graph_id(make(parse_family_spec(family))); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an encov::Error");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("sweep and check parsing") {
  const auto s = parse_family_sweep("generalized_wheel(1..5,3..10)");
  CHECK(s.kind == FamilyKind::generalized_wheel);
  REQUIRE(s.ranges.size() == 2);
  CHECK(s.ranges[0].lo == 1);
  CHECK(s.ranges[1].hi == 10);
  const auto one = parse_family_sweep("cycle(5)");
  CHECK(one.ranges[0].lo == 5);
  CHECK(one.ranges[0].hi == 5);
  CHECK_THROWS_AS(parse_family_sweep("cycle(5..3)"), Error);
  CHECK_THROWS_AS(parse_family_sweep("nonsense(1..2)"), Error);
  CHECK(parse_scan_check("tau") == ScanCheck::tau_bound);
  CHECK(parse_scan_check("wangma") == ScanCheck::wang_ma);
  CHECK(parse_scan_check("equality") == ScanCheck::equality_class);
  CHECK(parse_scan_check("matching") == ScanCheck::matching);
  CHECK_FALSE(parse_scan_check("bogus"));
}

TEST_CASE("split graphs n <= 6 meet the tau bound") {
  ScanSpec spec{.source = EnumerateSource{6, true}, .filter_any = {ClassTag::split}, .checks = {ScanCheck::tau_bound}};
  const auto res = run_scan(spec);
  CHECK(res.summary.ok());
  CHECK(res.summary.graphs_scanned > 0);
  for (const auto& r : res.reports)
    CHECK(std::find(r.class_tags.begin(), r.class_tags.end(), ClassTag::split) != r.class_tags.end());
  const auto* tau = res.summary.find(ScanCheck::tau_bound);
  REQUIRE(tau);
  CHECK(*tau->min_slack >= -1e-9);
}

TEST_CASE("equality cases among cycle-clique graphs n <= 7") {
  ScanSpec spec{.source = EnumerateSource{7, true},
                .filter_any = {ClassTag::cycle_clique},
                .checks = {ScanCheck::equality_class}};
  const auto res = run_scan(spec);
  CHECK(res.summary.ok());
  std::set<std::string> expected{id_of("cycle(4)")};
  for (int k = 1; k <= 7; ++k) expected.insert(id_of("complete(" + std::to_string(k) + ")"));
  const std::set<std::string> got(res.summary.equality_cases.begin(), res.summary.equality_cases.end());
  CHECK(got == expected);
  CHECK(got.count(id_of("cycle(3)")));
}

TEST_CASE("generalized wheel sweep") {
  ScanSpec spec{.source = parse_family_sweep("generalized_wheel(1..5,3..10)"), .checks = {ScanCheck::tau_bound}};
  const auto res = run_scan(spec);
  CHECK(res.summary.graphs_scanned == 40);
  const auto* tau = res.summary.find(ScanCheck::tau_bound);
  REQUIRE(tau);
  CHECK(std::abs(*tau->min_slack) <= 1e-9);
  const std::set<std::string> eq(res.summary.equality_cases.begin(), res.summary.equality_cases.end());
  CHECK(eq.count(id_of("generalized_wheel(1,3)")));
  CHECK(eq.count(id_of("generalized_wheel(2,4)")));
  CHECK_FALSE(eq.count(id_of("generalized_wheel(1,4)")));
  bool w14 = false, w24 = false;
  for (const auto& note : res.summary.notes) {
    w14 = w14 || note.starts_with("generalized_wheel(1,4): stated equality true");
    w24 = w24 || note.starts_with("generalized_wheel(2,4): stated equality false");
  }
  CHECK(w14);
  CHECK(w24);
}

TEST_CASE("extremal search") {
  ScanSpec multi{.source = parse_family_sweep("complete_multipartite(1..3,1..3,1..3)")};
  const auto top = find_extremal(multi, Objective::min_slack_tau, 50);
  const std::string k222 = id_of("complete_multipartite(2,2,2)");
  bool found = false;
  for (const auto& e : top) {
    if (e.graph_id == k222) {
      found = true;
      CHECK(std::abs(e.slack) <= 1e-9);
    }
  }
  CHECK(found);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < top.size(); ++i) {
    CHECK(ids.insert(top[i].graph_id).second);
    if (i) CHECK((top[i - 1].slack < top[i].slack ||
                  (top[i - 1].slack == top[i].slack && top[i - 1].graph_id < top[i].graph_id)));
  }

  ScanSpec k2{.source = GraphListSource{{make(parse_family_spec("complete(2)"))}}};
  const auto one = find_extremal(k2, Objective::min_slack_tau, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].graph_id == graph_id(make(parse_family_spec("complete(2)"))));
  CHECK(std::abs(one[0].slack) <= 1e-12);

  ScanSpec small{.source = EnumerateSource{6, true}};
  const auto global = find_extremal(small, Objective::min_slack_tau, 5);
  REQUIRE(global.size() == 5);
  CHECK(global[0].slack >= -1e-9);
  CHECK(find_extremal(small, Objective::min_slack_wang_ma, 3).size() == 3);
}

TEST_CASE("parallel and serial runs write identical files") {
  TempDir dir("encov_test_scan_par");
  for (auto fmt : {ReportFormat::json_lines, ReportFormat::csv}) {
    ScanSpec spec{.source = EnumerateSource{7, false}, .output_path = dir.file("serial"), .format = fmt, .jobs = 1};
    const auto serial = run_scan(spec);
    spec.output_path = dir.file("parallel");
    spec.jobs = 4;
    const auto parallel = run_scan(spec);
    CHECK(slurp(dir.file("serial")) == slurp(dir.file("parallel")));
    CHECK(serial.reports == parallel.reports);
    CHECK(serial.summary.violations == parallel.summary.violations);
    CHECK(serial.summary.graphs_scanned == 1044 + 156 + 34 + 11 + 4 + 2 + 1);
  }
}

TEST_CASE("resume after interruption reproduces the full output") {
  TempDir dir("encov_test_scan_resume");
  for (auto fmt : {ReportFormat::json_lines, ReportFormat::csv}) {
    ScanSpec full{.source = EnumerateSource{6, false}, .output_path = dir.file("full"), .format = fmt, .jobs = 2};
    run_scan(full);

    ScanSpec part = full;
    part.output_path = dir.file("part");
    part.stop_after = 100;
    const auto first = run_scan(part);
    CHECK(first.reports.size() == 100);
    // tear the last line as a crash would
    {
      std::string text = slurp(dir.file("part"));
      text.resize(text.size() - 7);
      std::ofstream(dir.file("part"), std::ios::binary | std::ios::trunc) << text;
    }
    part.stop_after = 50;
    part.resume = true;
    run_scan(part);
    part.stop_after.reset();
    const auto rest = run_scan(part);
    CHECK(slurp(dir.file("part")) == slurp(dir.file("full")));
    CHECK(rest.summary.graphs_scanned == 156 + 34 + 11 + 4 + 2 + 1);
  }
}

TEST_CASE("graph6 file source") {
  TempDir dir("encov_test_scan_g6");
  {
    std::ofstream out(dir.file("in.g6"));
    out << ">>graph6<<Bw\nC~\n\nDQo\n";
  }
  ScanSpec spec{.source = Graph6FileSource{dir.file("in.g6")}};
  const auto res = run_scan(spec);
  CHECK(res.summary.graphs_scanned == 3);
  CHECK(res.summary.ok());

  {
    std::ofstream out(dir.file("bad.g6"));
    out << "Bw\nC~\nC!!\n";
  }
  try {
    run_scan(ScanSpec{.source = Graph6FileSource{dir.file("bad.g6")}});
    FAIL("expected MalformedGraph6");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::malformed_graph6);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(code_of([&] { run_scan(ScanSpec{.source = Graph6FileSource{dir.file("absent.g6")}}); }) == Errc::io_error);
  CHECK(code_of([&] { run_scan(ScanSpec{.source = EnumerateSource{3, true}, .output_path = dir.file("no/such/file")}); }) ==
        Errc::io_error);
  CHECK(code_of([] { run_scan(ScanSpec{.source = EnumerateSource{9, true}}); }) == Errc::too_large);
}

TEST_CASE("summary is computed from the reports alone") {
  const auto res = run_scan(ScanSpec{.source = EnumerateSource{6, true}, .jobs = 3});
  const auto again = summarize(res.reports, std::vector<ScanCheck>{});
  CHECK(again.graphs_scanned == res.summary.graphs_scanned);
  CHECK(again.equality_cases == res.summary.equality_cases);
  CHECK(again.unbacked_graphs == res.summary.unbacked_graphs);
  CHECK(again.violations.empty());
  CHECK(again.unbacked_below == 0);
  for (ScanCheck c : {ScanCheck::tau_bound, ScanCheck::wang_ma, ScanCheck::matching, ScanCheck::equality_class})
    CHECK(again.find(c));

  // a fabricated backed report below the bound becomes a violation
  auto reports = res.reports;
  auto& r = reports.front();
  r.slack_tau = -0.5;
  r.slack_matching = -0.5;
  const auto broken = summarize(reports, std::vector<ScanCheck>{});
  CHECK_FALSE(broken.ok());

  const auto j = nlohmann::json::parse(summary_to_json(res.summary));
  CHECK(j["graphs_scanned"] == res.summary.graphs_scanned);
  CHECK(j["violation_count"] == 0);
  CHECK(j["checks"].contains("tau_bound"));
  CHECK(j["tau_unbacked"].contains("min_slack_tau"));
}

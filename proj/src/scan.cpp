#include "encov/scan.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "json.hpp"

#include "encov/canonical.hpp"
#include "encov/error.hpp"
#include "encov/graph6.hpp"

namespace encov {

namespace {

constexpr std::array<ScanCheck, 4> kAllChecks{ScanCheck::tau_bound, ScanCheck::wang_ma, ScanCheck::matching,
                                              ScanCheck::equality_class};

constexpr std::size_t kBatch = 512;
constexpr long long kMaxSweepPoints = 1'000'000;

[[noreturn]] void bad(const std::string& why) { throw Error(Errc::bad_parameter, why); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    bad("bad integer \"" + std::string(s) + "\" in " + std::string(context));
  }
  return value;
}

// Runs f(i) for i in [0, count) on up to `jobs` threads; the first
// exception is rethrown after all workers stop.
template <typename F>
void parallel_for(std::size_t count, int jobs, F&& f) {
  const std::size_t workers = std::min<std::size_t>(std::max(jobs, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Item {
  Graph graph;
  std::optional<FamilySpec> family;
  std::string id;
};

void sweep_points(const FamilySweepSource& sweep, std::vector<Item>& out) {
  if (sweep.ranges.empty()) bad("family sweep needs at least one parameter range");
  long long points = 1;
  for (const auto& r : sweep.ranges) {
    if (r.lo > r.hi) bad("empty parameter range " + std::to_string(r.lo) + ".." + std::to_string(r.hi));
    points *= static_cast<long long>(r.hi) - r.lo + 1;
    if (points > kMaxSweepPoints) bad("family sweep has too many points");
  }
  std::vector<int> params;
  for (const auto& r : sweep.ranges) params.push_back(r.lo);
  while (true) {
    FamilySpec spec{sweep.kind, params};
    out.push_back({make(spec), spec, {}});
    std::size_t i = params.size();
    while (i > 0) {
      --i;
      if (params[i] < sweep.ranges[i].hi) {
        ++params[i];
        break;
      }
      params[i] = sweep.ranges[i].lo;
      if (i == 0) return;
    }
  }
}

std::vector<Item> materialize(const ScanSource& source) {
  std::vector<Item> items;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, EnumerateSource>) {
          if (s.n_max < 1) bad("enumerate needs n_max >= 1");
          if (s.n_max > kScanEnumerateMax) {
            throw Error(Errc::too_large, "built-in enumeration stops at n = " + std::to_string(kScanEnumerateMax));
          }
          for (int n = 1; n <= s.n_max; ++n) {
            for (auto& g : enumerate_nonisomorphic(n, s.connected_only)) items.push_back({std::move(g), {}, {}});
          }
        } else if constexpr (std::is_same_v<S, Graph6FileSource>) {
          for (auto& g : read_graph6_file(s.path)) items.push_back({std::move(g), {}, {}});
        } else if constexpr (std::is_same_v<S, FamilySweepSource>) {
          sweep_points(s, items);
        } else {
          for (const auto& g : s.graphs) items.push_back({g, {}, {}});
        }
      },
      source);
  return items;
}

bool passes(TagMask tags, const std::vector<ClassTag>& filter) {
  if (filter.empty()) return true;
  return std::any_of(filter.begin(), filter.end(), [&](ClassTag t) { return has_tag(tags, t); });
}

std::string render(const BoundReport& r, ReportFormat format) {
  return format == ReportFormat::csv ? to_csv(r) : to_json(r);
}

std::vector<BoundReport> read_existing(const std::string& path, ReportFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return read_report(in, format);
}

void update_min(CheckSummary& cs, double slack, const std::string& id) {
  if (!cs.min_slack || slack < *cs.min_slack || (slack == *cs.min_slack && id < cs.argmin)) {
    cs.min_slack = slack;
    cs.argmin = id;
  }
}

bool in_checks(std::span<const ScanCheck> checks, ScanCheck c) {
  return std::find(checks.begin(), checks.end(), c) != checks.end();
}

}  // namespace

FamilySweepSource parse_family_sweep(std::string_view text) {
  text = trim(text);
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')') {
    bad("sweep must look like kind(lo..hi,...): \"" + std::string(text) + "\"");
  }
  FamilySweepSource sweep;
  const auto kind = parse_family_kind(trim(text.substr(0, open)));
  if (!kind) bad("unknown family \"" + std::string(trim(text.substr(0, open))) + "\"");
  sweep.kind = *kind;
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  while (!trim(body).empty()) {
    const auto comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    const auto dots = item.find("..");
    ParamRange r;
    if (dots == std::string_view::npos) {
      r.lo = r.hi = parse_int(item, text);
    } else {
      r.lo = parse_int(item.substr(0, dots), text);
      r.hi = parse_int(item.substr(dots + 2), text);
      if (r.hi < r.lo) bad("empty range in \"" + std::string(text) + "\"");
    }
    sweep.ranges.push_back(r);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return sweep;
}

std::string_view to_string(ScanCheck check) {
  switch (check) {
    case ScanCheck::tau_bound: return "tau_bound";
    case ScanCheck::wang_ma: return "wang_ma";
    case ScanCheck::matching: return "matching";
    case ScanCheck::equality_class: return "equality_class";
  }
  return "unknown";
}

std::optional<ScanCheck> parse_scan_check(std::string_view name) {
  if (name == "tau" || name == "tau_bound") return ScanCheck::tau_bound;
  if (name == "wangma" || name == "wang_ma") return ScanCheck::wang_ma;
  if (name == "matching") return ScanCheck::matching;
  if (name == "equality" || name == "equality_class") return ScanCheck::equality_class;
  return std::nullopt;
}

const CheckSummary* ScanSummary::find(ScanCheck check) const {
  for (const auto& cs : checks) {
    if (cs.check == check) return &cs;
  }
  return nullptr;
}

ScanSummary summarize(std::span<const BoundReport> reports, std::span<const ScanCheck> checks_in) {
  std::vector<ScanCheck> checks(checks_in.begin(), checks_in.end());
  if (checks.empty()) checks.assign(kAllChecks.begin(), kAllChecks.end());
  ScanSummary s;
  for (ScanCheck c : kAllChecks) {
    if (in_checks(checks, c)) s.checks.push_back({c, 0, 0, std::nullopt, {}});
  }
  auto slot = [&](ScanCheck c) -> CheckSummary* {
    for (auto& cs : s.checks) {
      if (cs.check == c) return &cs;
    }
    return nullptr;
  };

  for (const auto& r : reports) {
    ++s.graphs_scanned;
    if (r.equality_tau) s.equality_cases.push_back(r.graph_id);

    if (auto* cs = slot(ScanCheck::tau_bound)) {
      if (r.tau_backed()) {
        ++cs->evaluated;
        update_min(*cs, r.slack_tau, r.graph_id);
        if (r.slack_tau < -kSlackTol) s.violations.push_back({r.graph_id, ScanCheck::tau_bound, r.slack_tau});
      } else {
        ++s.unbacked_graphs;
        if (!s.unbacked_min_slack_tau || r.slack_tau < *s.unbacked_min_slack_tau ||
            (r.slack_tau == *s.unbacked_min_slack_tau && r.graph_id < s.unbacked_argmin)) {
          s.unbacked_min_slack_tau = r.slack_tau;
          s.unbacked_argmin = r.graph_id;
        }
        if (r.slack_tau < -kSlackTol) ++s.unbacked_below;
      }
    }
    if (auto* cs = slot(ScanCheck::wang_ma)) {
      if (r.slack_wang_ma) {
        ++cs->evaluated;
        update_min(*cs, *r.slack_wang_ma, r.graph_id);
        if (*r.slack_wang_ma < -kSlackTol) s.violations.push_back({r.graph_id, ScanCheck::wang_ma, *r.slack_wang_ma});
      } else {
        ++cs->skipped;
      }
    }
    if (auto* cs = slot(ScanCheck::matching)) {
      ++cs->evaluated;
      update_min(*cs, r.slack_matching, r.graph_id);
      if (r.slack_matching < -kSlackTol) s.violations.push_back({r.graph_id, ScanCheck::matching, r.slack_matching});
    }
    if (auto* cs = slot(ScanCheck::equality_class)) {
      // graph_id is a graph6 string of (an isomorphic copy of) the graph
      const bool cc = std::find(r.class_tags.begin(), r.class_tags.end(), ClassTag::cycle_clique) != r.class_tags.end();
      if (cc) {
        const Graph g = parse_graph6(r.graph_id);
        if (is_connected(g)) {
          ++cs->evaluated;
          update_min(*cs, r.slack_tau, r.graph_id);
          if (equality_classification(g) != r.equality_tau) {
            s.violations.push_back({r.graph_id, ScanCheck::equality_class, r.slack_tau});
          }
        } else {
          ++cs->skipped;
        }
      } else {
        ++cs->skipped;
      }
    }
  }
  return s;
}

ScanResult run_scan(const ScanSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  if (spec.jobs < 1) bad("jobs must be >= 1");
  if (spec.resume && spec.output_path.empty()) bad("resume needs an output path");

  std::vector<Item> items = materialize(spec.source);
  parallel_for(items.size(), spec.jobs, [&](std::size_t i) {
    Graph g = items[i].graph;
    if (spec.verify.strip_isolated) g = induced_delete(g, isolated_vertices(g));
    items[i].id = graph_id(g);
  });
  std::vector<std::size_t> order(items.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return items[a].id < items[b].id; });

  std::vector<BoundReport> reports;
  std::size_t first = 0;
  std::ofstream out;
  if (!spec.output_path.empty()) {
    if (spec.resume && std::filesystem::exists(spec.output_path)) {
      reports = read_existing(spec.output_path, spec.format);
      // the last id may have been cut short mid-group; redo it entirely
      if (!reports.empty()) {
        const std::string last = reports.back().graph_id;
        while (!reports.empty() && reports.back().graph_id == last) reports.pop_back();
        first = std::lower_bound(order.begin(), order.end(), last,
                                 [&](std::size_t i, const std::string& id) { return items[i].id < id; }) -
                order.begin();
      }
    }
    out.open(spec.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot write " + spec.output_path);
    if (spec.format == ReportFormat::csv) out << csv_header() << '\n';
    for (const auto& r : reports) out << render(r, spec.format) << '\n';
    out.flush();
  }

  std::size_t last = order.size();
  if (spec.stop_after) last = std::min<std::size_t>(last, first + std::max<long long>(*spec.stop_after, 0));

  for (std::size_t begin = first; begin < last; begin += kBatch) {
    const std::size_t end = std::min(last, begin + kBatch);
    std::vector<std::optional<BoundReport>> batch(end - begin);
    parallel_for(batch.size(), spec.jobs, [&](std::size_t k) {
      const Item& item = items[order[begin + k]];
      if (!passes(class_tags(item.graph), spec.filter_any)) return;
      batch[k] = verify(item.graph, spec.verify);
    });
    for (auto& r : batch) {
      if (!r) continue;
      if (out.is_open()) out << render(*r, spec.format) << '\n';
      reports.push_back(std::move(*r));
    }
    if (out.is_open()) {
      out.flush();
      if (!out) throw Error(Errc::io_error, "write failed for " + spec.output_path);
    }
  }

  ScanResult result;
  result.summary = summarize(reports, spec.checks);

  std::map<std::string, const BoundReport*> by_id;
  for (const auto& r : reports) by_id.emplace(r.graph_id, &r);
  std::set<std::string> seen;
  for (std::size_t i : order) {
    const Item& item = items[i];
    if (!item.family) continue;
    const auto stated = stated_equality(*item.family);
    const auto it = by_id.find(item.id);
    if (!stated || it == by_id.end() || *stated == it->second->equality_tau) continue;
    std::string note = to_string(*item.family) + ": stated equality " + (*stated ? "true" : "false") +
                       ", computed slack_tau " + format_double(it->second->slack_tau);
    if (seen.insert(note).second) result.summary.notes.push_back(std::move(note));
  }

  result.reports = std::move(reports);
  result.summary.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<Extremal> find_extremal(const ScanSpec& spec_in, Objective objective, std::size_t k) {
  ScanSpec spec = spec_in;
  spec.output_path.clear();
  spec.resume = false;
  const ScanResult result = run_scan(spec);
  std::vector<Extremal> all;
  std::set<std::string> seen;
  for (const auto& r : result.reports) {
    if (!seen.insert(r.graph_id).second) continue;
    if (objective == Objective::min_slack_tau) {
      all.push_back({r.graph_id, r.slack_tau});
    } else if (r.slack_wang_ma) {
      all.push_back({r.graph_id, *r.slack_wang_ma});
    }
  }
  std::sort(all.begin(), all.end(), [](const Extremal& a, const Extremal& b) {
    return a.slack != b.slack ? a.slack < b.slack : a.graph_id < b.graph_id;
  });
  if (all.size() > k) all.resize(k);
  return all;
}

std::string summary_to_json(const ScanSummary& s, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["graphs_scanned"] = s.graphs_scanned;
  ordered_json checks = ordered_json::object();
  for (const auto& cs : s.checks) {
    ordered_json c;
    c["evaluated"] = cs.evaluated;
    c["skipped"] = cs.skipped;
    c["min_slack"] = cs.min_slack ? ordered_json(*cs.min_slack) : ordered_json(nullptr);
    c["argmin"] = cs.min_slack ? ordered_json(cs.argmin) : ordered_json(nullptr);
    checks[std::string(to_string(cs.check))] = c;
  }
  j["checks"] = checks;
  j["equality_cases"] = s.equality_cases;
  ordered_json v = ordered_json::array();
  for (const auto& x : s.violations) {
    v.push_back({{"graph_id", x.graph_id}, {"check", std::string(to_string(x.check))}, {"slack", x.slack}});
  }
  j["violations"] = v;
  j["violation_count"] = s.violations.size();
  ordered_json unbacked;
  unbacked["graphs"] = s.unbacked_graphs;
  unbacked["min_slack_tau"] = s.unbacked_min_slack_tau ? ordered_json(*s.unbacked_min_slack_tau) : ordered_json(nullptr);
  unbacked["argmin"] = s.unbacked_min_slack_tau ? ordered_json(s.unbacked_argmin) : ordered_json(nullptr);
  unbacked["below_threshold"] = s.unbacked_below;
  j["tau_unbacked"] = unbacked;
  j["notes"] = s.notes;
  j["wall_time"] = s.wall_time;
  return j.dump(indent);
}

}  // namespace encov

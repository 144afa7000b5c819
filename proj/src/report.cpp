#include "encov/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "encov/error.hpp"

namespace encov {

namespace {

using nlohmann::json;

std::string json_quote(std::string_view s) { return json(std::string(s)).dump(); }

template <typename T>
std::string joined(const std::vector<T>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += to_string(items[i]);
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) break;
    s.remove_prefix(at + 1);
  }
  return out;
}

ClassTag tag_or_throw(std::string_view name) {
  auto tag = parse_class_tag(name);
  if (!tag) throw Error(Errc::bad_parameter, "unknown class tag \"" + std::string(name) + "\"");
  return *tag;
}

TheoremId theorem_or_throw(std::string_view name) {
  auto id = parse_theorem_id(name);
  if (!id) throw Error(Errc::bad_parameter, "unknown theorem id \"" + std::string(name) + "\"");
  return *id;
}

double parse_double(std::string_view s) {
  try {
    std::size_t used = 0;
    const std::string text(s);
    const double x = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw Error(Errc::bad_parameter, "bad number \"" + std::string(s) + "\"");
  }
}

long long parse_int(std::string_view s) {
  try {
    std::size_t used = 0;
    const std::string text(s);
    const long long x = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing");
    return x;
  } catch (const std::exception&) {
    throw Error(Errc::bad_parameter, "bad integer \"" + std::string(s) + "\"");
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const BoundReport& r) {
  std::string out = "{";
  out += "\"graph_id\":" + json_quote(r.graph_id);
  out += ",\"n\":" + std::to_string(r.n);
  out += ",\"m\":" + std::to_string(r.m);
  out += ",\"energy\":" + format_double(r.energy);
  out += ",\"tau\":" + std::to_string(r.tau);
  out += ",\"mu\":" + std::to_string(r.mu);
  out += ",\"c\":" + (r.c ? std::to_string(*r.c) : std::string("null"));
  out += ",\"omega\":" + std::to_string(r.omega);
  out += ",\"class_tags\":[";
  for (std::size_t i = 0; i < r.class_tags.size(); ++i) {
    out += (i ? "," : "") + json_quote(to_string(r.class_tags[i]));
  }
  out += "]";
  out += ",\"slack_tau\":" + format_double(r.slack_tau);
  out += ",\"slack_wang_ma\":" + (r.slack_wang_ma ? format_double(*r.slack_wang_ma) : std::string("null"));
  out += ",\"slack_matching\":" + format_double(r.slack_matching);
  out += std::string(",\"equality_tau\":") + (r.equality_tau ? "true" : "false");
  out += ",\"guaranteed_by\":[";
  for (std::size_t i = 0; i < r.guaranteed_by.size(); ++i) {
    out += (i ? "," : "") + json_quote(to_string(r.guaranteed_by[i]));
  }
  out += "]}";
  return out;
}

BoundReport report_from_json(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw Error(Errc::bad_parameter, std::string("bad report line: ") + e.what());
  }
  try {
    BoundReport r;
    r.graph_id = j.at("graph_id").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<long long>();
    r.energy = j.at("energy").get<double>();
    r.tau = j.at("tau").get<int>();
    r.mu = j.at("mu").get<int>();
    if (!j.at("c").is_null()) r.c = j.at("c").get<long long>();
    r.omega = j.at("omega").get<int>();
    for (const auto& t : j.at("class_tags")) r.class_tags.push_back(tag_or_throw(t.get<std::string>()));
    r.slack_tau = j.at("slack_tau").get<double>();
    if (!j.at("slack_wang_ma").is_null()) r.slack_wang_ma = j.at("slack_wang_ma").get<double>();
    r.slack_matching = j.at("slack_matching").get<double>();
    r.equality_tau = j.at("equality_tau").get<bool>();
    for (const auto& t : j.at("guaranteed_by")) r.guaranteed_by.push_back(theorem_or_throw(t.get<std::string>()));
    return r;
  } catch (const json::exception& e) {
    throw Error(Errc::bad_parameter, std::string("bad report line: ") + e.what());
  }
}

std::string csv_header() {
  return "graph_id,n,m,energy,tau,mu,c,omega,class_tags,slack_tau,slack_wang_ma,slack_matching,"
         "equality_tau,guaranteed_by";
}

std::string to_csv(const BoundReport& r) {
  std::string out = r.graph_id;
  out += ',' + std::to_string(r.n);
  out += ',' + std::to_string(r.m);
  out += ',' + format_double(r.energy);
  out += ',' + std::to_string(r.tau);
  out += ',' + std::to_string(r.mu);
  out += ',' + (r.c ? std::to_string(*r.c) : std::string());
  out += ',' + std::to_string(r.omega);
  out += ',' + joined(r.class_tags, "|");
  out += ',' + format_double(r.slack_tau);
  out += ',' + (r.slack_wang_ma ? format_double(*r.slack_wang_ma) : std::string());
  out += ',' + format_double(r.slack_matching);
  out += r.equality_tau ? ",true" : ",false";
  out += ',' + joined(r.guaranteed_by, "|");
  return out;
}

BoundReport report_from_csv(std::string_view line) {
  const auto cells = split(line, ',');
  if (cells.size() != 14) throw Error(Errc::bad_parameter, "CSV report row needs 14 cells");
  BoundReport r;
  r.graph_id = std::string(cells[0]);
  r.n = static_cast<int>(parse_int(cells[1]));
  r.m = parse_int(cells[2]);
  r.energy = parse_double(cells[3]);
  r.tau = static_cast<int>(parse_int(cells[4]));
  r.mu = static_cast<int>(parse_int(cells[5]));
  if (!cells[6].empty()) r.c = parse_int(cells[6]);
  r.omega = static_cast<int>(parse_int(cells[7]));
  if (!cells[8].empty()) {
    for (auto t : split(cells[8], '|')) r.class_tags.push_back(tag_or_throw(t));
  }
  r.slack_tau = parse_double(cells[9]);
  if (!cells[10].empty()) r.slack_wang_ma = parse_double(cells[10]);
  r.slack_matching = parse_double(cells[11]);
  if (cells[12] != "true" && cells[12] != "false") {
    throw Error(Errc::bad_parameter, "equality_tau must be true or false");
  }
  r.equality_tau = cells[12] == "true";
  if (!cells[13].empty()) {
    for (auto t : split(cells[13], '|')) r.guaranteed_by.push_back(theorem_or_throw(t));
  }
  return r;
}

void write_report(std::span<const BoundReport> reports, ReportFormat format, std::ostream& out) {
  std::vector<const BoundReport*> rows;
  for (const auto& r : reports) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BoundReport* a, const BoundReport* b) { return a->graph_id < b->graph_id; });
  if (format == ReportFormat::csv) out << csv_header() << '\n';
  for (const BoundReport* r : rows) {
    out << (format == ReportFormat::csv ? to_csv(*r) : to_json(*r)) << '\n';
  }
}

void write_report_file(std::span<const BoundReport> reports, ReportFormat format,
                       const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io_error, "cannot write " + path);
  write_report(reports, format, out);
  if (!out) throw Error(Errc::io_error, "write failed for " + path);
}

std::vector<BoundReport> read_report(std::istream& in, ReportFormat format) {
  std::vector<BoundReport> out;
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string_view rest = text;
  bool first = true;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    if (nl == std::string_view::npos) break;
    const std::string_view line = rest.substr(0, nl);
    rest.remove_prefix(nl + 1);
    if (format == ReportFormat::csv && first) {
      first = false;
      if (line == csv_header()) continue;
      throw Error(Errc::bad_parameter, "CSV report is missing its header");
    }
    first = false;
    if (line.empty()) continue;
    out.push_back(format == ReportFormat::csv ? report_from_csv(line) : report_from_json(line));
  }
  return out;
}

}  // namespace encov

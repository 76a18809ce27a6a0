#include "plap/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace plap {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool BoundReport::sandwich_consistent(double rel_slack) const {
  const double lo = best_lower(), hi = best_upper();
  if (lo == -kInf || hi == kInf) return true;
  return lo <= hi * (1.0 + rel_slack) + rel_slack;
}

double BoundReport::best_lower() const {
  double best = -kInf;
  for (const auto& e : entries)
    if (e.kind == BoundKind::Lower) best = std::max(best, e.value);
  return best;
}

double BoundReport::best_upper() const {
  double best = kInf;
  for (const auto& e : entries)
    if (e.kind == BoundKind::Upper) best = std::min(best, e.value);
  return best;
}

std::string to_string(BoundKind k) {
  return k == BoundKind::Lower ? "lower" : "upper";
}

BoundKind bound_kind_from_string(const std::string& s) {
  if (s == "lower") return BoundKind::Lower;
  if (s == "upper") return BoundKind::Upper;
  throw std::invalid_argument("unknown bound kind: " + s);
}

std::string format_shortest(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_scientific(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

namespace {

nlohmann::ordered_json entry_to_json(const BoundEntry& e) {
  nlohmann::ordered_json j;
  j["name"] = e.name;
  j["kind"] = to_string(e.kind);
  if (std::isinf(e.value))
    j["value"] = e.value > 0 ? "inf" : "-inf";
  else
    j["value"] = e.value;
  j["source"] = e.source;
  j["certified"] = e.certified;
  return j;
}

}  // namespace

std::string report_to_json(const std::vector<BoundEntry>& entries,
                           const std::map<std::string, std::string>& config,
                           bool with_timestamp) {
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : config) j["config"][k] = v;
  j["results"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) j["results"].push_back(entry_to_json(e));
  j["version"] = kVersion;
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now();
    j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                         now.time_since_epoch())
                         .count();
  }
  return j.dump(2) + "\n";
}

std::string report_to_csv(const std::vector<BoundEntry>& entries) {
  std::ostringstream os;
  os << "name,kind,value,source,certified\n";
  for (const auto& e : entries) {
    std::string src = e.source;
    std::replace(src.begin(), src.end(), ',', ';');
    os << e.name << ',' << to_string(e.kind) << ',' << format_shortest(e.value)
       << ',' << src << ',' << (e.certified ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string report_to_table(const std::vector<BoundEntry>& entries) {
  std::ostringstream os;
  size_t name_w = 4, src_w = 6;
  for (const auto& e : entries) {
    name_w = std::max(name_w, e.name.size());
    src_w = std::max(src_w, e.source.size());
  }
  os << std::string(name_w, ' ') << "  kind   " << "value             "
     << " certified  source\n";
  for (const auto& e : entries) {
    std::string name = e.name;
    name.resize(name_w, ' ');
    os << name << "  " << (e.kind == BoundKind::Lower ? "lower" : "upper")
       << "  " << format_scientific(e.value) << "  "
       << (e.certified ? "yes" : "no ") << "        " << e.source << '\n';
  }
  return os.str();
}

std::vector<BoundEntry> report_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<BoundEntry> out;
  for (const auto& r : j.at("results")) {
    BoundEntry e;
    e.name = r.at("name").get<std::string>();
    e.kind = bound_kind_from_string(r.at("kind").get<std::string>());
    if (r.at("value").is_string()) {
      const auto s = r.at("value").get<std::string>();
      e.value = (s == "inf") ? kInf : (s == "-inf" ? -kInf : std::stod(s));
    } else {
      e.value = r.at("value").get<double>();
    }
    e.source = r.at("source").get<std::string>();
    e.certified = r.at("certified").get<bool>();
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace plap

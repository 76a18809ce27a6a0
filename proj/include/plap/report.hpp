#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plap {

enum class BoundKind { Lower, Upper };

struct BoundEntry {
  std::string name;
  BoundKind kind = BoundKind::Lower;
  double value = 0.0;
  std::string source;  // which estimate certifies the value
  bool certified = true;
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  // Every lower value must sit below every upper value.
  bool sandwich_consistent(double rel_slack = 1e-12) const;
  double best_lower() const;
  double best_upper() const;
};

struct EigenBoundReport {
  std::vector<BoundEntry> entries;  // all lower bounds
  std::string best_name;
  double best_value = 0.0;
  // Informational only: lim_{p->inf} lambda_1^{1/p} = 1/r_Omega.
  std::optional<double> p_inf_root_limit;
};

// Serialization used by the CLI. `config` is echoed verbatim into the
// output envelope {"config": ..., "results": [...], "version": ...}.
std::string report_to_json(const std::vector<BoundEntry>& entries,
                           const std::map<std::string, std::string>& config,
                           bool with_timestamp);
std::string report_to_csv(const std::vector<BoundEntry>& entries);
std::string report_to_table(const std::vector<BoundEntry>& entries);

// Parse the JSON envelope back into entries (round-trip check support).
std::vector<BoundEntry> report_from_json(const std::string& text);

std::string to_string(BoundKind k);
BoundKind bound_kind_from_string(const std::string& s);

// Shortest round-trip decimal formatting (CSV) and fixed 12-significant-digit
// scientific formatting (tables).
std::string format_shortest(double v);
std::string format_scientific(double v);

inline constexpr const char* kVersion = "0.1.0";

}  // namespace plap

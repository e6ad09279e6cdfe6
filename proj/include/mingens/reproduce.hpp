#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mingens/exec.hpp"

namespace mingens {

// Reference values, grouped as in the CLI's --table option:
// 1 ranks, 2 L-class counts, 3 enumeration sizes, 4 row-space filter sizes.
struct ReferenceValue {
  int table = 0;
  std::string quantity;
  int n = 0;
  std::uint64_t value = 0;
};
const std::vector<ReferenceValue>& reference_values();

enum class RowStatus { pass, fail, flagged, skipped };
std::string to_string(RowStatus s);

struct ReproRow {
  std::string quantity;
  int n = 0;
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> computed;
  RowStatus status = RowStatus::skipped;
  std::string note;
};

class TierExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReproOptions {
  int max_n = 5;
  bool long_tier = false;
  Exec exec = Exec::parallel;
};

// Parses "1".."4" or "ranks", "lclasses", "enumeration", "filter".
int table_from_string(const std::string& s);

// Computes every reference value of the table with n <= max_n. Throws
// TierExceeded when a value needs the long tier and long_tier is off.
std::vector<ReproRow> reproduce_table(int table, const ReproOptions& opt);

// Computes one quantity; nullopt when it is out of reach at this n.
std::optional<std::uint64_t> compute_quantity(const std::string& quantity, int n, Exec exec = Exec::parallel);

// Largest n for each tier, 0 when unsupported.
int fast_tier_limit(const std::string& quantity);
int long_tier_limit(const std::string& quantity);

}  // namespace mingens

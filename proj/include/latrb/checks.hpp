#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latrb/enumerate.hpp"
#include "latrb/serialize.hpp"

namespace latrb {

/// Harness configuration. Loaded from flags and an optional JSON file.
struct CheckConfig {
  EnumerationLimits limits;
  /// Lattices larger than this are skipped by every check.
  std::optional<std::size_t> max_size;
  std::vector<std::string> catalog = default_catalog();
  std::string expected_path = default_expected_path();
  unsigned threads = 1;

  static std::vector<std::string> default_catalog();
  static std::string default_expected_path();
};

/// Reads {"isotone_limit", "full_scan_limit", "oracle_limit", "max_size",
/// "catalog", "expected"}; every key is optional.
CheckConfig load_check_config(const std::string& path);

struct CheckReport {
  std::string id;
  std::string spec;
  bool passed = false;
  std::chrono::milliseconds elapsed{0};
  std::optional<std::string> witness;
  std::vector<std::uint64_t> counts;
};

/// Registry entry.
struct CheckInfo {
  std::string_view id;
  std::string_view summary;
  std::string_view lattices;  // which lattices the check runs on
  std::string_view source;    // "formula" or "pinned"
};

const std::vector<CheckInfo>& check_registry();

/// Runs one check over its lattice list. Reports are sorted by lattice spec
/// in natural order. Throws UnknownCheck; SizeLimitExceeded propagates.
std::vector<CheckReport> run_check(std::string_view id, const CheckConfig& config = {});

/// Every registered check, in registry order.
std::vector<CheckReport> run_all_checks(const CheckConfig& config = {});

/// Digit-aware ordering: "chain:2" < "chain:10".
bool natural_less(std::string_view a, std::string_view b);

/// Recomputes the pinned quantities with the brute-force oracle.
ExpectedValues generate_expected_values(const EnumerationLimits& limits = {8, 8, 8});

}  // namespace latrb

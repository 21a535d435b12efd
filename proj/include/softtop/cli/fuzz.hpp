#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace softtop::cli {

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t iterations = 100;
  std::size_t max_universe = 3;
  std::size_t max_params = 2;
};

struct PropertyTally {
  std::string name;
  /// The statement the property checks.
  std::string anchor;
  std::size_t checked = 0;
  /// Instances beyond the size cap or cell budget.
  std::size_t skipped = 0;
  std::size_t failures = 0;
  std::optional<std::size_t> first_instance;
  std::optional<std::string> first_failure;
};

struct FuzzReport {
  FuzzOptions options;
  std::vector<PropertyTally> properties;

  bool passed() const;
  std::string text() const;
  std::string json() const;
};

/// Runs every property on `iterations` instances. Instance i draws from the
/// stream split(seed, i), so the report depends only on the options.
FuzzReport fuzz(const FuzzOptions& options);

}  // namespace softtop::cli

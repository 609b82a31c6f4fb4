#pragma once

/**
 * @file verify.hpp
 * @brief Exhaustive verification sweeps over S_n (or an avoidance class of
 * S_n), each reporting every failing permutation.
 */

#include <string>
#include <string_view>
#include <vector>

#include "grothpd/permutation.hpp"

namespace grothpd {

class SpecCache;

struct Witness {
  Permutation w;
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::string check_name;
  std::string universe;
  std::size_t universe_size = 0;
  std::size_t passes = 0;
  std::vector<Witness> failures;

  bool ok() const { return failures.empty(); }
  /// "24/24 pass" or "23/24 pass".
  std::string summary() const;
  std::string to_json() const;
  /// Plain-text table: one header block, then one row per failure.
  std::string to_table() const;
};

/// Known check identifiers, in a fixed order.
const std::vector<std::string>& check_ids();

/// Runs `check` over its universe for rank n on `jobs` threads. Throws
/// std::invalid_argument for an unknown check or n < 0. When `cache` is null
/// a private cache is used for the Υ lookups.
CheckReport verify(std::string_view check, int n, int jobs = 1, SpecCache* cache = nullptr);

}  // namespace grothpd

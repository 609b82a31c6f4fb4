#pragma once

/**
 * @file spec_cache.hpp
 * @brief Memo table of principal specialisations Υ_w(β), keyed by
 * permutation, with a JSON on-disk form.
 *
 * Lookups are safe from concurrent workers. Inserts happen under an
 * exclusive lock, so parallel sweeps either warm the table first with
 * prefill() or merge their misses through get().
 */

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "grothpd/permutation.hpp"
#include "grothpd/poly.hpp"

namespace grothpd {

class SpecCache {
 public:
  SpecCache() = default;
  SpecCache(const SpecCache&) = delete;
  SpecCache& operator=(const SpecCache&) = delete;

  /// Υ_w(β), computing and storing it on a miss.
  BetaPoly get(const Permutation& w);
  std::optional<BetaPoly> find(const Permutation& w) const;
  void put(const Permutation& w, BetaPoly value);

  /// Computes every permutation of size <= n that is missing, `jobs` workers
  /// at a time, then merges the results.
  void prefill(int n, int jobs = 1);

  std::size_t size() const;

  /// {"format": "grothpd-upsilon-cache", "version": 1,
  ///  "entries": {"2,1,4,3": [3,3,1], ...}}
  std::string to_json() const;
  void save(const std::string& path) const;

  /// Replaces the contents with the file's entries. One randomly chosen
  /// entry is recomputed; a mismatch or a malformed file throws
  /// std::runtime_error and leaves the cache empty.
  void load(const std::string& path);
  void load_json(const std::string& text);

 private:
  mutable std::shared_mutex mutex_;
  std::map<Permutation, BetaPoly> table_;
};

}  // namespace grothpd

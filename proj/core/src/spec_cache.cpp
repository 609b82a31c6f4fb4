#include "grothpd/spec_cache.hpp"

#include <fstream>
#include <iterator>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "grothpd/parallel.hpp"
#include "grothpd/special.hpp"
#include "json_codec.hpp"

namespace grothpd {

namespace {
constexpr const char* kFormat = "grothpd-upsilon-cache";
}

BetaPoly SpecCache::get(const Permutation& w) {
  if (auto hit = find(w)) return *hit;
  BetaPoly value = upsilon_beta(w);
  put(w, value);
  return value;
}

std::optional<BetaPoly> SpecCache::find(const Permutation& w) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(w);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void SpecCache::put(const Permutation& w, BetaPoly value) {
  std::unique_lock lock(mutex_);
  table_.insert_or_assign(w, std::move(value));
}

void SpecCache::prefill(int n, int jobs) {
  std::vector<Permutation> missing;
  for (int k = 0; k <= n; ++k)
    for (auto& w : all_permutations(k))
      if (!find(w)) missing.push_back(std::move(w));

  std::vector<BetaPoly> values(missing.size());
  parallel_for(missing.size(), jobs, [&](std::size_t k) { values[k] = upsilon_beta(missing[k]); });

  std::unique_lock lock(mutex_);
  for (std::size_t k = 0; k < missing.size(); ++k) table_.insert_or_assign(missing[k], std::move(values[k]));
}

std::size_t SpecCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

std::string SpecCache::to_json() const {
  nlohmann::json entries = nlohmann::json::object();
  {
    std::shared_lock lock(mutex_);
    for (const auto& [w, v] : table_) entries[w.to_string()] = beta_poly_to_json_value(v);
  }
  nlohmann::json doc{{"format", kFormat}, {"version", 1}, {"entries", entries}};
  return doc.dump(1);
}

void SpecCache::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache file " + path);
  out << to_json() << '\n';
}

void SpecCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read cache file " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  load_json(text);
}

void SpecCache::load_json(const std::string& text) {
  auto reject = [this](const std::string& why) {
    {
      std::unique_lock lock(mutex_);
      table_.clear();
    }
    throw std::runtime_error(why);
  };

  std::map<Permutation, BetaPoly> fresh;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.value("format", "") != kFormat || doc.value("version", 0) != 1) {
      reject("unrecognised cache format");
    }
    for (const auto& [key, value] : doc.at("entries").items()) {
      fresh.emplace(parse_permutation(key), beta_poly_from_json_value(value));
    }
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception& e) {
    reject(std::string("malformed cache: ") + e.what());
  }

  if (!fresh.empty()) {
    std::random_device rd;
    std::mt19937 gen(rd());
    std::uniform_int_distribution<std::size_t> pick(0, fresh.size() - 1);
    auto it = std::next(fresh.begin(), static_cast<std::ptrdiff_t>(pick(gen)));
    if (upsilon_beta(it->first) != it->second) reject("cache audit failed for w = " + it->first.to_string());
  }
  std::unique_lock lock(mutex_);
  table_ = std::move(fresh);
}

}  // namespace grothpd

#include "grothpd/special.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "grothpd/pipe_dream.hpp"
#include "grothpd/reduction.hpp"
#include "grothpd/spec_cache.hpp"

namespace grothpd {

namespace {

// Υ lookups for one computation: the shared cache when given, otherwise a
// private memo.
class UpsilonSource {
 public:
  explicit UpsilonSource(SpecCache* cache) : cache_(cache) {}

  BetaPoly operator()(const Permutation& w) {
    if (cache_) return cache_->get(w);
    auto it = memo_.find(w);
    if (it == memo_.end()) it = memo_.emplace(w, upsilon_beta(w)).first;
    return it->second;
  }

 private:
  SpecCache* cache_;
  std::map<Permutation, BetaPoly> memo_;
};

BetaPoly one_plus_beta_power(int k) {
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1);
  for (int d = 0; d <= k; ++d) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(d));
    c[static_cast<std::size_t>(d)] = b;
  }
  return BetaPoly(std::move(c));
}

BetaPoly c_recursive(const Permutation& w, UpsilonSource& upsilon, std::map<Permutation, BetaPoly>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  BetaPoly c = upsilon(w);
  for (int m = 0; m < w.size(); ++m) {
    for (const auto& v : all_permutations(m)) {
      const auto occurrences = count_pattern(v, w);
      if (occurrences == 0) continue;
      c -= c_recursive(v, upsilon, memo) * mpz_class(static_cast<unsigned long>(occurrences));
    }
  }
  memo.emplace(w, c);
  return c;
}

}  // namespace

UpsilonMethod parse_upsilon_method(std::string_view name) {
  if (name == "pd") return UpsilonMethod::PipeDreams;
  if (name == "dd") return UpsilonMethod::DividedDifferences;
  throw std::invalid_argument("unknown upsilon method \"" + std::string(name) + "\" (expected pd or dd)");
}

CMethod parse_c_method(std::string_view name) {
  if (name == "ie") return CMethod::InclusionExclusion;
  if (name == "rec") return CMethod::Recursive;
  if (name == "core") return CMethod::Core;
  throw std::invalid_argument("unknown c method \"" + std::string(name) + "\" (expected ie, rec or core)");
}

BetaPoly upsilon_beta(const Permutation& w, UpsilonMethod method) {
  if (method == UpsilonMethod::DividedDifferences) return specialize_ones(grothendieck_via_dd(w));
  BetaPoly total;
  for_each_rpd(w, [&](const PipeDream& p) {
    total += one_plus_beta_power(static_cast<int>(markable_bumps(p).size()));
  });
  return total;
}

mpz_class upsilon_schubert(const Permutation& w) { return upsilon_beta(w).coeff(0); }

mpz_class macdonald_value(const Permutation& w) {
  mpz_class sum = 0;
  for (const auto& word : reduced_words(w)) {
    mpz_class prod = 1;
    for (int a : word) prod *= a;
    sum += prod;
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(w.length()));
  if (sum % fact != 0) {
    throw std::logic_error("macdonald_value: " + sum.get_str() + " is not divisible by " + fact.get_str());
  }
  return sum / fact;
}

BetaPoly c_poly(const Permutation& w, CMethod method, SpecCache* cache) {
  UpsilonSource upsilon(cache);
  switch (method) {
    case CMethod::InclusionExclusion: {
      BetaPoly c;
      for (const auto& v : subwords(w)) {
        const BetaPoly term = upsilon(pattern_of(v.labels));
        if ((w.size() - v.size()) % 2 == 0) c += term;
        else c -= term;
      }
      return c;
    }
    case CMethod::Recursive: {
      std::map<Permutation, BetaPoly> memo;
      return c_recursive(w, upsilon, memo);
    }
    case CMethod::Core:
      if (!avoids(w, pattern_1423())) {
        throw std::invalid_argument("c_poly: the core method needs a 1423-avoiding permutation, got " +
                                    w.to_string());
      }
      return d_poly(w);
  }
  throw std::logic_error("c_poly: unhandled method");
}

BetaPoly interval_sum(std::span<const int> u, const Permutation& w, SpecCache* cache) {
  UpsilonSource upsilon(cache);
  BetaPoly s;
  for (const auto& v : interval_subwords(u, w.oneline())) {
    const BetaPoly term = upsilon(pattern_of(v.labels));
    if ((w.size() - v.size()) % 2 == 0) s += term;
    else s -= term;
  }
  return s;
}

BetaPoly core_count_sum(const Permutation& w) {
  std::map<Permutation, BetaPoly> memo;
  BetaPoly s;
  for (const auto& v : subwords(w)) {
    const Permutation pat = pattern_of(v.labels);
    auto it = memo.find(pat);
    if (it == memo.end()) it = memo.emplace(pat, d_poly(pat)).first;
    s += it->second;
  }
  return s;
}

const Permutation& pattern_1423() {
  static const Permutation p({1, 4, 2, 3});
  return p;
}

const Permutation& pattern_1342() {
  static const Permutation p({1, 3, 4, 2});
  return p;
}

}  // namespace grothpd

#pragma once

// Helpers and brute-force oracles shared by the tests. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "grothpd/permutation.hpp"
#include "grothpd/pipe_dream.hpp"

namespace grothpd::testing {

// "XBXB/BBB/BB/B" (M = marked bump), labels default to 1..rank.
inline PipeDream dream(const std::string& tiles, std::vector<int> labels = {}) {
  std::vector<std::vector<Tile>> rows(1);
  for (char c : tiles) {
    if (c == '/') {
      rows.emplace_back();
      continue;
    }
    rows.back().push_back(c == 'X' ? Tile::Cross : c == 'M' ? Tile::MarkedBump : Tile::Bump);
  }
  if (tiles.empty()) rows.clear();
  return PipeDream(std::move(rows), std::move(labels));
}

inline Permutation perm(const std::string& compact) {
  std::vector<int> v;
  for (char c : compact) v.push_back(c - '0');
  return Permutation(v);
}

// Pattern occurrences by checking every index subset of the right size.
inline std::uint64_t brute_pattern_count(const std::vector<int>& u, const std::vector<int>& w) {
  const std::size_t k = u.size(), n = w.size();
  if (k > n) return 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  std::uint64_t hits = 0;
  do {
    std::vector<int> sub;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) sub.push_back(w[i]);
    bool same = true;
    for (std::size_t a = 0; a < k && same; ++a)
      for (std::size_t b = 0; b < k && same; ++b) same = (sub[a] < sub[b]) == (u[a] < u[b]);
    hits += same;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return hits;
}

// Reduced words of w by trying every word of length ℓ(w) over 1..n-1.
inline std::set<std::vector<int>> brute_reduced_words(const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) len += w[i] > w[j];
  std::set<std::vector<int>> out;
  if (n < 2) {
    out.insert(std::vector<int>{});
    return out;
  }
  std::vector<int> word(static_cast<std::size_t>(len), 1);
  while (true) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    for (int a : word) std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(a)]);
    if (p == w) out.insert(word);
    std::size_t k = 0;
    while (k < word.size() && word[k] == n - 1) word[k++] = 1;
    if (k == word.size()) break;
    ++word[k];
  }
  return out;
}

// Straight re-implementation of pipe routing used as an oracle: returns the
// exit word and, for every tile, the (north, east) labels entering it
// (0 = none). Crossing rows per unordered pair go to `crossed_in`.
struct OracleTrace {
  std::vector<int> exits;
  std::vector<std::vector<std::pair<int, int>>> entering;
  std::map<std::pair<int, int>, std::vector<int>> crossed_in;
};

inline OracleTrace oracle_trace(const PipeDream& p) {
  const int m = p.rank();
  OracleTrace t;
  std::vector<int> from_above(p.labels().begin(), p.labels().end());
  for (int i = 1; i <= m; ++i) {
    const int width = m + 1 - i;
    std::vector<int> below(static_cast<std::size_t>(width), 0);
    std::vector<std::pair<int, int>> row(static_cast<std::size_t>(width));
    int from_right = 0;
    for (int j = width; j >= 1; --j) {
      const int n = from_above[static_cast<std::size_t>(j - 1)], e = from_right;
      row[static_cast<std::size_t>(j - 1)] = {n, e};
      if (p.at(i, j) == Tile::Cross) {
        below[static_cast<std::size_t>(j - 1)] = n;
        from_right = e;
        t.crossed_in[{std::min(n, e), std::max(n, e)}].push_back(i);
      } else {
        below[static_cast<std::size_t>(j - 1)] = e;
        from_right = n;
      }
    }
    t.exits.push_back(from_right);
    t.entering.push_back(std::move(row));
    below.pop_back();
    from_above = std::move(below);
  }
  return t;
}

inline std::vector<Position> oracle_markable(const PipeDream& p) {
  const OracleTrace t = oracle_trace(p);
  std::vector<Position> out;
  for (int i = 1; i <= p.rank(); ++i)
    for (int j = 1; j < p.rank() + 1 - i; ++j) {
      if (p.at(i, j) == Tile::Cross) continue;
      auto [n, e] = t.entering[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      auto it = t.crossed_in.find({std::min(n, e), std::max(n, e)});
      if (it != t.crossed_in.end() && std::any_of(it->second.begin(), it->second.end(), [&](int r) { return r < i; }))
        out.push_back({i, j});
    }
  return out;
}

inline bool oracle_reduced(const PipeDream& p) {
  const OracleTrace t = oracle_trace(p);
  return std::all_of(t.crossed_in.begin(), t.crossed_in.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

}  // namespace grothpd::testing

#include "grothpd/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grothpd {

namespace {

bool is_bijection(std::span<const int> word) {
  const auto n = word.size();
  std::vector<bool> seen(n + 1, false);
  for (int x : word) {
    if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

void reduced_words_rec(const Permutation& w, std::vector<int>& suffix,
                       std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) {
      suffix.push_back(i);
      reduced_words_rec(w.times_simple(i), suffix, out);
      suffix.pop_back();
    }
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> oneline) : entries_(std::move(oneline)) {
  if (!is_bijection(entries_)) {
    throw std::invalid_argument("not a permutation of {1..n}: [" + word_to_string(entries_) + "]");
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::longest(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = n - i;
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    inv[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
  }
  Permutation out;
  out.entries_ = std::move(inv);
  return out;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (entries_[i] > entries_[j]) ++inv;
  return inv;
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1 || i >= size()) throw std::out_of_range("simple transposition index out of range");
  Permutation out = *this;
  std::swap(out.entries_[static_cast<std::size_t>(i - 1)], out.entries_[static_cast<std::size_t>(i)]);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Permutation::to_string() const { return word_to_string(entries_); }

std::string Permutation::to_compact_string() const {
  std::string s;
  for (int x : entries_) s += std::to_string(x);
  return s;
}

Permutation perm_from_oneline(std::span<const int> word) {
  return Permutation(std::vector<int>(word.begin(), word.end()));
}

Word parse_word(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "()") return {};

  Word out;
  if (text.find(',') == std::string_view::npos) {
    // Compact digit form; a lone multi-digit token is read digit by digit.
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad word \"" + std::string(text) +
                                    "\": compact form takes digits 1-9 only");
      }
      out.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      auto tok = trim(text.substr(start, end - start));
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("bad word \"" + std::string(text) + "\": token \"" +
                                    std::string(tok) + "\" is not an integer");
      }
      out.push_back(value);
      start = end + 1;
    }
  }
  if (!is_distinct_word(out)) {
    throw std::invalid_argument("bad word \"" + std::string(text) +
                                "\": entries must be distinct positive integers");
  }
  return out;
}

Permutation parse_permutation(std::string_view text) { return Permutation(parse_word(text)); }

std::string word_to_string(std::span<const int> word) {
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) os << ',';
    os << word[i];
  }
  return os.str();
}

bool is_distinct_word(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 1) return false;
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Permutation pattern_of(std::span<const int> word) {
  std::vector<int> sorted(word.begin(), word.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("pattern_of: repeated entries in [" + word_to_string(word) + "]");
  }
  std::vector<int> out(word.size());
  for (std::size_t i = 0; i < word.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), word[i]) - sorted.begin()) + 1;
  }
  return Permutation(std::move(out));
}

std::uint64_t count_pattern(const Permutation& u, const Permutation& w) {
  const int k = u.size();
  const int n = w.size();
  if (k == 0) return 1;
  if (k > n) return 0;

  // Grow index tuples left to right; a partial selection survives only while
  // its relative order agrees with the corresponding prefix of u.
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::uint64_t count = 0;
  auto consistent = [&](int depth) {
    const int last = w(pick[static_cast<std::size_t>(depth)] + 1);
    const int ulast = u(depth + 1);
    for (int a = 0; a < depth; ++a) {
      const bool wl = w(pick[static_cast<std::size_t>(a)] + 1) < last;
      const bool ul = u(a + 1) < ulast;
      if (wl != ul) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int depth, int from) -> void {
    if (depth == k) {
      ++count;
      return;
    }
    for (int i = from; i <= n - (k - depth); ++i) {
      pick[static_cast<std::size_t>(depth)] = i;
      if (consistent(depth)) self(self, depth + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

bool avoids(const Permutation& w, const Permutation& p) { return count_pattern(p, w) == 0; }

std::vector<Subword> subwords(std::span<const int> word) {
  const auto n = word.size();
  if (n > 30) throw std::length_error("subwords: word too long");
  std::vector<Subword> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    Subword s;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::uint32_t{1} << k)) {
        s.labels.push_back(word[k]);
        s.positions.push_back(static_cast<int>(k));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool embed_subword(std::span<const int> sub, std::span<const int> parent, Subword& out) {
  out.labels.assign(sub.begin(), sub.end());
  out.positions.clear();
  std::size_t p = 0;
  for (int x : sub) {
    while (p < parent.size() && parent[p] != x) ++p;
    if (p == parent.size()) return false;
    out.positions.push_back(static_cast<int>(p));
    ++p;
  }
  return true;
}

bool is_subword(std::span<const int> sub, std::span<const int> parent) {
  Subword tmp;
  return embed_subword(sub, parent, tmp);
}

std::vector<Subword> interval_subwords(const Subword& u, std::span<const int> w) {
  Subword located;
  if (!embed_subword(u.labels, w, located)) {
    throw std::invalid_argument("interval_subwords: [" + word_to_string(u.labels) +
                                "] is not a subword of [" + word_to_string(w) + "]");
  }
  std::vector<bool> fixed(w.size(), false);
  for (int p : located.positions) fixed[static_cast<std::size_t>(p)] = true;
  std::vector<int> free;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (!fixed[k]) free.push_back(static_cast<int>(k));

  std::vector<Subword> out;
  out.reserve(std::size_t{1} << free.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << free.size()); ++mask) {
    std::vector<bool> take = fixed;
    for (std::size_t b = 0; b < free.size(); ++b)
      if (mask & (std::uint32_t{1} << b)) take[static_cast<std::size_t>(free[b])] = true;
    Subword s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (take[k]) {
        s.labels.push_back(w[k]);
        s.positions.push_back(static_cast<int>(k));
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Subword> interval_subwords(std::span<const int> u, std::span<const int> w) {
  Subword s;
  s.labels.assign(u.begin(), u.end());
  return interval_subwords(s, w);
}

std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> suffix;
  reduced_words_rec(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace grothpd

#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of {1..n} in one-line notation, subwords, pattern
 * statistics and reduced words.
 *
 * A Permutation is an immutable value. The empty permutation (n = 0) is a
 * legitimate member of S_0 and is what a default-constructed Permutation
 * holds.
 *
 * Words handled here (subwords, patterns) always have distinct positive
 * entries; positions are 0-based throughout the C++ API, while entry values
 * keep their natural 1-based meaning.
 */

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace grothpd {

/// A sequence of distinct positive integers (a subword read off a
/// permutation, or the exit word of a pipe dream with arbitrary labels).
using Word = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `oneline` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> oneline);

  static Permutation identity(int n);
  /// w_0 = n (n-1) ... 1.
  static Permutation longest(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  /// w(i) for 1 <= i <= n.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> oneline() const { return entries_; }
  const std::vector<int>& word() const { return entries_; }

  Permutation inverse() const;
  /// Inversion count.
  int length() const;

  /// w s_i: swaps positions i and i+1 (1-based).
  Permutation times_simple(int i) const;

  bool is_identity() const;

  /// Comma-separated one-line form, e.g. "2,1,4,3"; the empty permutation is "".
  std::string to_string() const;
  /// Digit form "2143" (only meaningful for n <= 9).
  std::string to_compact_string() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Subword of a parent word: selected labels together with the 0-based
/// positions they occupy in the parent.
struct Subword {
  std::vector<int> labels;
  std::vector<int> positions;

  int size() const { return static_cast<int>(labels.size()); }

  friend auto operator<=>(const Subword&, const Subword&) = default;
  friend bool operator==(const Subword&, const Subword&) = default;
};

Permutation perm_from_oneline(std::span<const int> word);

/// Parses "2,1,4,3" or the compact digit form "2143". The empty string and
/// "()" denote the empty word. Entries must be distinct positive integers.
Word parse_word(std::string_view text);
/// parse_word followed by the bijection check.
Permutation parse_permutation(std::string_view text);

std::string word_to_string(std::span<const int> word);

inline Permutation inverse(const Permutation& w) { return w.inverse(); }
inline int length(const Permutation& w) { return w.length(); }

/// Standardisation: the permutation with the same relative order as `word`.
/// perm(2574) = 1342. Throws on repeated entries.
Permutation pattern_of(std::span<const int> word);

/// True iff all entries are distinct and positive.
bool is_distinct_word(std::span<const int> word);

/// p_u(w): number of index subsets of w whose induced subword has pattern u.
/// p_∅(w) = 1.
std::uint64_t count_pattern(const Permutation& u, const Permutation& w);

bool avoids(const Permutation& w, const Permutation& p);

/// All 2^n subwords in bitmask order (bit k selects position k); the first is
/// ∅ and the last is the whole word.
std::vector<Subword> subwords(std::span<const int> word);
inline std::vector<Subword> subwords(const Permutation& w) { return subwords(w.oneline()); }

/// Locates `sub` inside `parent` (order-preserving). Returns false if `sub`
/// is not a subword.
bool embed_subword(std::span<const int> sub, std::span<const int> parent, Subword& out);
bool is_subword(std::span<const int> sub, std::span<const int> parent);

/// All v with u <= v <= w, in bitmask order over the free positions.
/// Throws std::invalid_argument if u is not a subword of w.
std::vector<Subword> interval_subwords(const Subword& u, std::span<const int> w);
std::vector<Subword> interval_subwords(std::span<const int> u, std::span<const int> w);

/// Red(w): every (a_1..a_l) with s_{a_1} ... s_{a_l} = w, sorted
/// lexicographically.
std::vector<std::vector<int>> reduced_words(const Permutation& w);

/// S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace grothpd

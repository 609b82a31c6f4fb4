#pragma once

/**
 * @file pipe_dream.hpp
 * @brief Staircase pipe dreams with crossing, bumping and marked bumping
 * tiles; pipe tracing, reducedness, markable bumps, and enumeration of
 * RPD(w) and MRPD(w).
 *
 * Coordinates are 1-based matrix coordinates (row, column). A rank-m dream
 * has m + 1 - i tiles in row i; the last tile of every row lies on the
 * southeast diagonal and is always an unmarked bump.
 *
 * Pipes enter through the top edge (pipe labels[c-1] above column c) and
 * travel down and left. A cross passes both pipes straight through; a bump
 * joins north with west and east with south. Marking never changes routing.
 */

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grothpd/permutation.hpp"
#include "grothpd/poly.hpp"

namespace grothpd {

// Enumerator order matches the row-major tile strings B < M < X used for
// deterministic sorting.
enum class Tile : unsigned char { Bump = 0, MarkedBump = 1, Cross = 2 };

struct Position {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
  friend bool operator==(const Position&, const Position&) = default;
};

class PipeDream {
 public:
  /// The empty dream of rank 0.
  PipeDream() = default;

  /// All-bump dream of the given rank with labels 1..rank.
  explicit PipeDream(int rank);

  /// Throws std::invalid_argument on a malformed staircase (row lengths,
  /// non-bump diagonal) or bad labels (not strictly increasing positive).
  /// Empty `labels` means 1..rank.
  explicit PipeDream(std::vector<std::vector<Tile>> rows, std::vector<int> labels = {});

  /// Builds a dream from its columns (column c holds rows 1..rank+1-c).
  static PipeDream from_columns(const std::vector<std::vector<Tile>>& columns,
                                std::vector<int> labels = {});

  /// Unmarked dream with crosses at `crosses` and marked bumps at `marks`.
  static PipeDream from_positions(int rank, std::span<const Position> crosses,
                                  std::span<const Position> marks = {},
                                  std::vector<int> labels = {});

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::vector<Tile>>& rows() const { return rows_; }

  bool contains(Position p) const {
    return p.row >= 1 && p.col >= 1 && p.row + p.col <= rank() + 1;
  }
  static bool on_diagonal(int rank, Position p) { return p.row + p.col == rank + 1; }
  bool on_diagonal(Position p) const { return on_diagonal(rank(), p); }

  Tile at(Position p) const {
    return rows_[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)];
  }
  Tile at(int row, int col) const { return at(Position{row, col}); }

  /// Replaces a tile. Diagonal tiles may only hold Bump.
  void set(Position p, Tile t);

  std::vector<Tile> column(int c) const;
  std::vector<std::vector<Tile>> columns() const;

  /// Same tiles, new labels (strictly increasing, one per column).
  PipeDream relabeled(std::vector<int> labels) const;
  /// Drops every mark.
  PipeDream unmarked() const;

  std::vector<Position> positions_of(Tile t) const;
  int count(Tile t) const;

  /// Row-major tile string with B / M / X per tile, rows joined by '/'.
  std::string tile_string() const;

  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;
  friend bool operator==(const PipeDream&, const PipeDream&) = default;

 private:
  std::vector<std::vector<Tile>> rows_;
  std::vector<int> labels_;
};

enum class Side : unsigned char { North, East, South, West };

struct TileVisit {
  Position pos;
  Side in;
  Side out;
  friend bool operator==(const TileVisit&, const TileVisit&) = default;
};

struct Routing {
  /// Labels read down the left boundary.
  std::vector<int> exit_word;
  /// Visits of each pipe in travel order, keyed by label.
  std::map<int, std::vector<TileVisit>> pipe_path;
  /// Crossing positions for each unordered label pair (smaller label first).
  std::map<std::pair<int, int>, std::vector<Position>> crossings;
  /// For each tile: the labels arriving from the north and from the east
  /// (0 where none arrives, i.e. the east side of diagonal tiles).
  std::vector<std::vector<std::pair<int, int>>> entering;

  std::pair<int, int> entering_at(Position p) const {
    return entering[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)];
  }
};

Routing trace(const PipeDream& p);

/// Exit word of the dream. For labels 1..m this is a permutation; use
/// permutation_of to get it as one.
std::vector<int> exit_word(const PipeDream& p);
/// Throws std::invalid_argument if the labels are not 1..rank.
Permutation permutation_of(const PipeDream& p);

/// Every pair of pipes crosses at most once.
bool is_reduced(const PipeDream& p);
bool is_reduced(const Routing& r);

/// Off-diagonal bump positions whose two pipes cross in some strictly
/// higher row. Marks on the input are ignored (they do not affect routing).
std::vector<Position> markable_bumps(const PipeDream& p);
std::vector<Position> markable_bumps(const PipeDream& p, const Routing& r);

/// Reduced, and every marked bump is markable.
bool is_marked_reduced(const PipeDream& p);

int mbt(const PipeDream& p);

/// ∏ x_i over crossing and marked tiles (i = row), in `nvars` variables
/// (defaults to the rank).
MultiPoly weight_monomial(const PipeDream& p, int nvars = -1);

/// RPD(w), sorted by tile string. Labels are 1..n.
std::vector<PipeDream> enumerate_rpd(const Permutation& w);
/// MRPD(w): each reduced dream with every subset of its markable bumps
/// marked; sorted by tile string.
std::vector<PipeDream> enumerate_mrpd(const Permutation& w);

/// MRPD of a subword: dreams of pattern_of(v) carrying the sorted entries of
/// v as labels, so that the exit word is v itself.
std::vector<PipeDream> enumerate_mrpd(std::span<const int> v);

/// Calls `visit` once per reduced dream of w (unsorted, no allocation of the
/// full set). Used by the counting paths.
void for_each_rpd(const Permutation& w, const std::function<void(const PipeDream&)>& visit);

/// Σ_{P ∈ MRPD(w)} β^{mbt(P)} x^P.
MultiPoly grothendieck_via_pd(const Permutation& w);

/// Staircase drawing: header line of top labels, then one line per row with
/// the exit label followed by the tiles ('+' cross, '.' bump, '*' marked
/// bump). The empty dream renders as the empty string.
std::string render_ascii(const PipeDream& p);
/// Inverse of render_ascii. Throws std::invalid_argument on malformed input
/// or when the left labels disagree with the traced exit word.
PipeDream parse_ascii(const std::string& text);

}  // namespace grothpd

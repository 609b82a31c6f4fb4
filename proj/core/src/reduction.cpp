#include "grothpd/reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace grothpd {

namespace {

int column_of(const PipeDream& p, int j) {
  const auto& l = p.labels();
  auto it = std::find(l.begin(), l.end(), j);
  if (it == l.end()) {
    throw std::invalid_argument("pipe " + std::to_string(j) + " is not a label of the dream");
  }
  return static_cast<int>(it - l.begin()) + 1;
}

bool removable_with(const PipeDream& p, const Routing& r, int j, int entry_col) {
  // (i) entry column: crosses, then unmarked bumps only.
  const auto col = p.column(entry_col);
  std::size_t k = 0;
  while (k < col.size() && col[k] == Tile::Cross) ++k;
  for (; k < col.size(); ++k)
    if (col[k] != Tile::Bump) return false;

  for (const auto& v : r.pipe_path.at(j)) {
    const Tile t = p.at(v.pos);
    // (iii)
    if (t == Tile::MarkedBump) return false;
    // (ii)
    if (t == Tile::Cross && v.pos.row > 1 && p.at(v.pos.row - 1, v.pos.col) == Tile::Bump) return false;
  }
  return true;
}

}  // namespace

bool is_removable(const PipeDream& p, const Routing& r, int j) {
  return removable_with(p, r, j, column_of(p, j));
}

bool is_removable(const PipeDream& p, int j) {
  const int c = column_of(p, j);
  return removable_with(p, trace(p), j, c);
}

std::vector<int> removable_labels(const PipeDream& p) {
  const Routing r = trace(p);
  std::vector<int> out;
  for (int c = 1; c <= p.rank(); ++c) {
    const int j = p.labels()[static_cast<std::size_t>(c - 1)];
    if (removable_with(p, r, j, c)) out.push_back(j);
  }
  return out;
}

bool is_core(const PipeDream& p) { return removable_labels(p).empty(); }

PipeDream phi_j(const PipeDream& p, int j) {
  const int entry = column_of(p, j);
  const Routing r = trace(p);
  if (!removable_with(p, r, j, entry)) {
    throw std::invalid_argument("phi_j: pipe " + std::to_string(j) + " is not removable");
  }

  auto cols = p.columns();
  // Row to drop from each column left of the entry column.
  std::vector<int> drop(static_cast<std::size_t>(entry), 0);
  for (const auto& v : r.pipe_path.at(j)) {
    const int y = v.pos.col;
    if (y >= entry) continue;
    if (p.at(v.pos) == Tile::Cross) {
      drop[static_cast<std::size_t>(y)] = v.pos.row;  // crossed horizontally
    } else if (v.in == Side::North) {
      // Lower tile of the vertical bump pair; the upper one keeps the
      // north-west arc and the lower one's east-south arc moves up into it.
      drop[static_cast<std::size_t>(y)] = v.pos.row;
    }
  }

  std::vector<std::vector<Tile>> out;
  for (int y = 1; y <= p.rank(); ++y) {
    if (y == entry) continue;
    auto col = std::move(cols[static_cast<std::size_t>(y - 1)]);
    if (y < entry) {
      const int row = drop[static_cast<std::size_t>(y)];
      if (row < 1) throw std::logic_error("phi_j: pipe path skips a column");
      col.erase(col.begin() + (row - 1));
    }
    out.push_back(std::move(col));
  }
  std::vector<int> labels = p.labels();
  labels.erase(labels.begin() + (entry - 1));
  return PipeDream::from_columns(out, std::move(labels));
}

ReductionResult reduce_to_core(const PipeDream& p, std::span<const int> keep) {
  ReductionResult res;
  res.origin = exit_word(p);
  PipeDream cur = p;
  for (;;) {
    int next = 0;
    for (int j : removable_labels(cur)) {
      if (std::find(keep.begin(), keep.end(), j) == keep.end()) {
        next = j;
        break;
      }
    }
    if (next == 0) break;
    cur = phi_j(cur, next);
    res.removed.push_back(next);
  }
  res.core.word = exit_word(cur);
  res.core.dream = std::move(cur);
  return res;
}

PsiResult psi_j(const PipeDream& p, int j, int position) {
  const auto& old_labels = p.labels();
  if (std::find(old_labels.begin(), old_labels.end(), j) != old_labels.end()) {
    throw std::invalid_argument("psi_j: pipe " + std::to_string(j) + " is already present");
  }
  const int m = p.rank() + 1;
  if (position < 1 || position > m) return {};
  const int smaller = static_cast<int>(std::count_if(old_labels.begin(), old_labels.end(),
                                                     [j](int l) { return l < j; }));

  auto cols = p.columns();
  int row = position;
  for (int k = 1; k <= smaller; ++k) {
    auto& col = cols[static_cast<std::size_t>(k - 1)];
    const int above = row - 1;
    if (above >= 1 && above <= static_cast<int>(col.size()) &&
        col[static_cast<std::size_t>(above - 1)] == Tile::Bump) {
      // Split the bump above: j turns south in it and west in the new tile.
      col.insert(col.begin() + (row - 1), Tile::Bump);
      row = above;
    } else {
      if (row - 1 > static_cast<int>(col.size())) return {};
      col.insert(col.begin() + (row - 1), Tile::Cross);
      if (row == static_cast<int>(col.size())) return {};  // cross on the diagonal
    }
  }

  // Entry column of j: row-1 crosses, then bumps to the column height.
  const int height = m - smaller;
  if (row > height) return {};
  std::vector<Tile> entry(static_cast<std::size_t>(height), Tile::Bump);
  std::fill(entry.begin(), entry.begin() + (row - 1), Tile::Cross);
  cols.insert(cols.begin() + smaller, std::move(entry));

  std::vector<int> labels = old_labels;
  labels.insert(labels.begin() + smaller, j);

  PsiResult out;
  out.diagram = PipeDream::from_columns(cols, std::move(labels));
  out.valid = is_reduced(*out.diagram);
  return out;
}

PipeDream psi(const ReductionResult& r) {
  PipeDream cur = r.core.dream;
  std::vector<int> present = cur.labels();
  for (auto it = r.removed.rbegin(); it != r.removed.rend(); ++it) {
    const int j = *it;
    present.push_back(j);
    int position = 0;
    int seen = 0;
    for (int x : r.origin) {
      if (std::find(present.begin(), present.end(), x) == present.end()) continue;
      ++seen;
      if (x == j) position = seen;
    }
    if (position == 0) {
      throw std::invalid_argument("psi: removed label " + std::to_string(j) + " missing from origin word");
    }
    auto step = psi_j(cur, j, position);
    if (!step.valid || !is_marked_reduced(*step.diagram)) {
      throw std::invalid_argument("psi: re-inserting pipe " + std::to_string(j) +
                                  " does not give a marked reduced pipe dream");
    }
    cur = std::move(*step.diagram);
  }
  return cur;
}

std::vector<CoreDream> enumerate_cmrpd(std::span<const int> v) {
  std::vector<CoreDream> out;
  for (auto& p : enumerate_mrpd(v)) {
    if (is_core(p)) out.push_back({std::move(p), Word(v.begin(), v.end())});
  }
  return out;
}

BetaPoly d_poly(std::span<const int> v) {
  BetaPoly d;
  for (const auto& c : enumerate_cmrpd(v)) d.add_term(mbt(c.dream), 1);
  return d;
}

std::vector<CoreDream> enumerate_cmrpd_rel(std::span<const int> u, std::span<const int> v) {
  if (!is_subword(u, v)) {
    throw std::invalid_argument("enumerate_cmrpd_rel: [" + word_to_string(u) + "] is not a subword of [" +
                                word_to_string(v) + "]");
  }
  std::vector<int> free;
  for (int x : v)
    if (std::find(u.begin(), u.end(), x) == u.end()) free.push_back(x);

  std::vector<CoreDream> out;
  for (auto& p : enumerate_mrpd(v)) {
    const Routing r = trace(p);
    const bool pinned = std::none_of(free.begin(), free.end(),
                                     [&](int j) { return is_removable(p, r, j); });
    if (pinned) out.push_back({std::move(p), Word(v.begin(), v.end())});
  }
  return out;
}

BetaPoly d_rel_poly(std::span<const int> u, std::span<const int> v) {
  if (!is_subword(u, v)) return {};
  BetaPoly d;
  for (const auto& c : enumerate_cmrpd_rel(u, v)) d.add_term(mbt(c.dream), 1);
  return d;
}

}  // namespace grothpd

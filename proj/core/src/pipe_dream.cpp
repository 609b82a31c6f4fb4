#include "grothpd/pipe_dream.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace grothpd {

namespace {

std::vector<int> default_labels(int rank) {
  if (rank < 0) throw std::invalid_argument("negative pipe dream rank");
  std::vector<int> l(static_cast<std::size_t>(rank));
  std::iota(l.begin(), l.end(), 1);
  return l;
}

void check_labels(const std::vector<int>& labels) {
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (labels[k] < 1 || (k > 0 && labels[k] <= labels[k - 1])) {
      throw std::invalid_argument("pipe dream labels must be strictly increasing positive integers");
    }
  }
}

char glyph(Tile t) {
  switch (t) {
    case Tile::Cross: return '+';
    case Tile::Bump: return '.';
    case Tile::MarkedBump: return '*';
  }
  return '?';
}

}  // namespace

// ---------------------------------------------------------------- PipeDream

PipeDream::PipeDream(int rank) : labels_(default_labels(rank)) {
  for (int i = 1; i <= rank; ++i) rows_.emplace_back(static_cast<std::size_t>(rank + 1 - i), Tile::Bump);
}

PipeDream::PipeDream(std::vector<std::vector<Tile>> rows, std::vector<int> labels)
    : rows_(std::move(rows)), labels_(std::move(labels)) {
  const int m = static_cast<int>(rows_.size());
  if (labels_.empty()) labels_ = default_labels(m);
  if (static_cast<int>(labels_.size()) != m) {
    throw std::invalid_argument("pipe dream has " + std::to_string(m) + " rows but " +
                                std::to_string(labels_.size()) + " labels");
  }
  check_labels(labels_);
  for (int i = 1; i <= m; ++i) {
    const auto& row = rows_[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != m + 1 - i) {
      throw std::invalid_argument("row " + std::to_string(i) + " of a rank-" + std::to_string(m) +
                                  " pipe dream must have " + std::to_string(m + 1 - i) + " tiles");
    }
    if (row.back() != Tile::Bump) {
      throw std::invalid_argument("diagonal tile (" + std::to_string(i) + "," +
                                  std::to_string(m + 1 - i) + ") must be an unmarked bump");
    }
  }
}

PipeDream PipeDream::from_columns(const std::vector<std::vector<Tile>>& columns, std::vector<int> labels) {
  const int m = static_cast<int>(columns.size());
  std::vector<std::vector<Tile>> rows(static_cast<std::size_t>(m));
  for (int c = 1; c <= m; ++c) {
    const auto& col = columns[static_cast<std::size_t>(c - 1)];
    if (static_cast<int>(col.size()) != m + 1 - c) {
      throw std::invalid_argument("column " + std::to_string(c) + " of a rank-" + std::to_string(m) +
                                  " pipe dream must have " + std::to_string(m + 1 - c) + " tiles");
    }
    for (int r = 1; r <= m + 1 - c; ++r) rows[static_cast<std::size_t>(r - 1)].push_back(col[static_cast<std::size_t>(r - 1)]);
  }
  return PipeDream(std::move(rows), std::move(labels));
}

PipeDream PipeDream::from_positions(int rank, std::span<const Position> crosses,
                                    std::span<const Position> marks, std::vector<int> labels) {
  PipeDream p(rank);
  if (!labels.empty()) p = p.relabeled(std::move(labels));
  for (auto pos : crosses) p.set(pos, Tile::Cross);
  for (auto pos : marks) p.set(pos, Tile::MarkedBump);
  return p;
}

void PipeDream::set(Position p, Tile t) {
  if (!contains(p)) throw std::out_of_range("tile position outside the staircase");
  if (on_diagonal(p) && t != Tile::Bump) {
    throw std::invalid_argument("diagonal tiles must stay unmarked bumps");
  }
  rows_[static_cast<std::size_t>(p.row - 1)][static_cast<std::size_t>(p.col - 1)] = t;
}

std::vector<Tile> PipeDream::column(int c) const {
  std::vector<Tile> out;
  for (int r = 1; r <= rank() + 1 - c; ++r) out.push_back(at(r, c));
  return out;
}

std::vector<std::vector<Tile>> PipeDream::columns() const {
  std::vector<std::vector<Tile>> out;
  for (int c = 1; c <= rank(); ++c) out.push_back(column(c));
  return out;
}

PipeDream PipeDream::relabeled(std::vector<int> labels) const {
  if (labels.size() != labels_.size()) throw std::invalid_argument("relabeled: label count mismatch");
  check_labels(labels);
  PipeDream out = *this;
  out.labels_ = std::move(labels);
  return out;
}

PipeDream PipeDream::unmarked() const {
  PipeDream out = *this;
  for (auto& row : out.rows_)
    for (auto& t : row)
      if (t == Tile::MarkedBump) t = Tile::Bump;
  return out;
}

std::vector<Position> PipeDream::positions_of(Tile t) const {
  std::vector<Position> out;
  for (int r = 1; r <= rank(); ++r)
    for (int c = 1; c <= rank() + 1 - r; ++c)
      if (at(r, c) == t) out.push_back({r, c});
  return out;
}

int PipeDream::count(Tile t) const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(std::count(row.begin(), row.end(), t));
  return n;
}

std::string PipeDream::tile_string() const {
  std::string s;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) s += '/';
    for (Tile t : rows_[r]) s += (t == Tile::Cross ? 'X' : t == Tile::MarkedBump ? 'M' : 'B');
  }
  return s;
}

// ------------------------------------------------------------------ tracing

Routing trace(const PipeDream& p) {
  const int m = p.rank();
  Routing r;
  r.exit_word.resize(static_cast<std::size_t>(m));
  r.entering.resize(static_cast<std::size_t>(m));
  for (int label : p.labels()) r.pipe_path[label];

  // north[c] holds the label entering column c from above in the current row.
  std::vector<int> north(p.labels().begin(), p.labels().end());
  for (int i = 1; i <= m; ++i) {
    const int len = m + 1 - i;
    auto& ent = r.entering[static_cast<std::size_t>(i - 1)];
    ent.assign(static_cast<std::size_t>(len), {0, 0});
    std::vector<int> south(static_cast<std::size_t>(len), 0);
    int carry = 0;  // label travelling west into the current tile
    for (int c = len; c >= 1; --c) {
      const int from_north = north[static_cast<std::size_t>(c - 1)];
      const int from_east = carry;
      ent[static_cast<std::size_t>(c - 1)] = {from_north, from_east};
      const Position pos{i, c};
      if (p.at(pos) == Tile::Cross) {
        r.pipe_path[from_north].push_back({pos, Side::North, Side::South});
        r.pipe_path[from_east].push_back({pos, Side::East, Side::West});
        r.crossings[std::minmax(from_north, from_east)].push_back(pos);
        south[static_cast<std::size_t>(c - 1)] = from_north;
        carry = from_east;
      } else {
        r.pipe_path[from_north].push_back({pos, Side::North, Side::West});
        if (from_east != 0) r.pipe_path[from_east].push_back({pos, Side::East, Side::South});
        south[static_cast<std::size_t>(c - 1)] = from_east;
        carry = from_north;
      }
    }
    r.exit_word[static_cast<std::size_t>(i - 1)] = carry;
    south.pop_back();  // the diagonal column does not continue into row i+1
    north = std::move(south);
  }
  return r;
}

std::vector<int> exit_word(const PipeDream& p) { return trace(p).exit_word; }

Permutation permutation_of(const PipeDream& p) {
  for (int k = 0; k < p.rank(); ++k) {
    if (p.labels()[static_cast<std::size_t>(k)] != k + 1) {
      throw std::invalid_argument("permutation_of: dream carries subword labels; use exit_word");
    }
  }
  return Permutation(exit_word(p));
}

bool is_reduced(const Routing& r) {
  return std::all_of(r.crossings.begin(), r.crossings.end(),
                     [](const auto& kv) { return kv.second.size() <= 1; });
}

bool is_reduced(const PipeDream& p) { return is_reduced(trace(p)); }

std::vector<Position> markable_bumps(const PipeDream& p, const Routing& r) {
  std::vector<Position> out;
  for (int i = 1; i <= p.rank(); ++i) {
    for (int c = 1; c < p.rank() + 1 - i; ++c) {
      const Position pos{i, c};
      if (p.at(pos) == Tile::Cross) continue;
      auto [n, e] = r.entering_at(pos);
      auto it = r.crossings.find(std::minmax(n, e));
      if (it == r.crossings.end()) continue;
      if (std::any_of(it->second.begin(), it->second.end(), [&](Position x) { return x.row < i; })) {
        out.push_back(pos);
      }
    }
  }
  return out;
}

std::vector<Position> markable_bumps(const PipeDream& p) { return markable_bumps(p, trace(p)); }

bool is_marked_reduced(const PipeDream& p) {
  const Routing r = trace(p);
  if (!is_reduced(r)) return false;
  const auto ok = markable_bumps(p, r);
  for (auto pos : p.positions_of(Tile::MarkedBump)) {
    if (!std::binary_search(ok.begin(), ok.end(), pos)) return false;
  }
  return true;
}

int mbt(const PipeDream& p) { return p.count(Tile::MarkedBump); }

MultiPoly weight_monomial(const PipeDream& p, int nvars) {
  if (nvars < 0) nvars = p.rank();
  Exponent e(static_cast<std::size_t>(nvars) + 1, 0);
  for (int r = 1; r <= p.rank(); ++r) {
    for (int c = 1; c <= p.rank() + 1 - r; ++c) {
      if (p.at(r, c) == Tile::Bump) continue;
      if (r > nvars) throw std::out_of_range("weight_monomial: row exceeds variable count");
      ++e[static_cast<std::size_t>(r)];
    }
  }
  return MultiPoly::monomial(nvars, e);
}

// -------------------------------------------------------------- enumeration

namespace {

// Depth-first tile assignment, rows top to bottom and each row right to
// left, which is exactly the order in which tracing resolves pipes. A cross
// is only placed between two pipes that form an inversion of w and have not
// crossed yet; a row is accepted only if it releases w(i) on the left.
class RpdSearch {
 public:
  RpdSearch(const Permutation& w, const std::function<void(const PipeDream&)>& visit)
      : w_(w), m_(w.size()), visit_(visit) {
    std::vector<int> pos(static_cast<std::size_t>(m_) + 1);
    for (int i = 1; i <= m_; ++i) pos[static_cast<std::size_t>(w(i))] = i;
    inversion_.assign(static_cast<std::size_t>(m_) + 1, 0);
    crossed_.assign(static_cast<std::size_t>(m_) + 1, 0);
    for (int a = 1; a <= m_; ++a)
      for (int b = a + 1; b <= m_; ++b)
        if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)]) {
          inversion_[static_cast<std::size_t>(a)] |= bit(b);
          inversion_[static_cast<std::size_t>(b)] |= bit(a);
        }
    for (int i = 1; i <= m_; ++i) rows_.emplace_back(static_cast<std::size_t>(m_ + 1 - i), Tile::Bump);
    flow_.assign(static_cast<std::size_t>(m_) + 1, std::vector<int>(static_cast<std::size_t>(m_) + 1, 0));
    for (int c = 1; c <= m_; ++c) flow_[0][static_cast<std::size_t>(c)] = c;
  }

  void run() { start_row(1); }

 private:
  static std::uint32_t bit(int k) { return std::uint32_t{1} << k; }

  void start_row(int i) {
    if (i > m_) {
      visit_(PipeDream(rows_));
      return;
    }
    const int diag = m_ + 1 - i;
    // Diagonal bump: the northern pipe turns west, nothing continues south.
    tile(i, diag - 1, flow_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(diag)]);
  }

  void tile(int i, int c, int carry) {
    if (c == 0) {
      if (carry == w_(i)) start_row(i + 1);
      return;
    }
    const int north = flow_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c)];
    auto& cell = rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(c - 1)];
    auto& south = flow_[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];

    cell = Tile::Bump;
    south = carry;
    tile(i, c - 1, north);

    auto& cn = crossed_[static_cast<std::size_t>(north)];
    if ((inversion_[static_cast<std::size_t>(north)] & bit(carry)) && !(cn & bit(carry))) {
      cn |= bit(carry);
      crossed_[static_cast<std::size_t>(carry)] |= bit(north);
      cell = Tile::Cross;
      south = north;
      tile(i, c - 1, carry);
      cn &= ~bit(carry);
      crossed_[static_cast<std::size_t>(carry)] &= ~bit(north);
      cell = Tile::Bump;
    }
  }

  const Permutation& w_;
  int m_;
  const std::function<void(const PipeDream&)>& visit_;
  std::vector<std::uint32_t> inversion_;
  std::vector<std::uint32_t> crossed_;
  std::vector<std::vector<Tile>> rows_;
  // flow_[i][c]: label leaving row i southward in column c (row 0 = top edge).
  std::vector<std::vector<int>> flow_;
};

}  // namespace

void for_each_rpd(const Permutation& w, const std::function<void(const PipeDream&)>& visit) {
  if (w.size() > 30) throw std::length_error("enumerate_rpd: rank too large");
  RpdSearch(w, visit).run();
}

std::vector<PipeDream> enumerate_rpd(const Permutation& w) {
  std::vector<PipeDream> out;
  for_each_rpd(w, [&](const PipeDream& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> enumerate_mrpd(const Permutation& w) {
  std::vector<PipeDream> out;
  for_each_rpd(w, [&](const PipeDream& p) {
    const auto spots = markable_bumps(p);
    const std::uint32_t subsets = std::uint32_t{1} << spots.size();
    for (std::uint32_t mask = 0; mask < subsets; ++mask) {
      PipeDream q = p;
      for (std::size_t k = 0; k < spots.size(); ++k)
        if (mask & (std::uint32_t{1} << k)) q.set(spots[k], Tile::MarkedBump);
      out.push_back(std::move(q));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> enumerate_mrpd(std::span<const int> v) {
  std::vector<int> labels(v.begin(), v.end());
  std::sort(labels.begin(), labels.end());
  auto out = enumerate_mrpd(pattern_of(v));
  for (auto& p : out) p = p.relabeled(labels);
  return out;
}

MultiPoly grothendieck_via_pd(const Permutation& w) {
  const int n = w.size();
  MultiPoly g(n);
  for (const auto& p : enumerate_mrpd(w)) {
    MultiPoly term = weight_monomial(p, n);
    Exponent beta_exp(static_cast<std::size_t>(n) + 1, 0);
    beta_exp[0] = static_cast<std::uint16_t>(mbt(p));
    g += term * MultiPoly::monomial(n, beta_exp);
  }
  return g;
}

// --------------------------------------------------------------- ASCII form

std::string render_ascii(const PipeDream& p) {
  const int m = p.rank();
  if (m == 0) return "";
  std::size_t width = 1;
  for (int l : p.labels()) width = std::max(width, std::to_string(l).size());
  auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };

  const auto exits = exit_word(p);
  std::ostringstream os;
  os << pad("");
  for (int l : p.labels()) os << ' ' << pad(std::to_string(l));
  os << '\n';
  for (int r = 1; r <= m; ++r) {
    os << pad(std::to_string(exits[static_cast<std::size_t>(r - 1)]));
    for (int c = 1; c <= m + 1 - r; ++c) os << ' ' << pad(std::string(1, glyph(p.at(r, c))));
    os << '\n';
  }
  return os.str();
}

PipeDream parse_ascii(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty()) return PipeDream();

  auto to_int = [](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size()) throw std::invalid_argument("parse_ascii: expected a label, got \"" + s + "\"");
    return v;
  };

  std::vector<int> labels;
  for (const auto& t : lines[0]) labels.push_back(to_int(t));
  const int m = static_cast<int>(labels.size());
  if (static_cast<int>(lines.size()) != m + 1) {
    throw std::invalid_argument("parse_ascii: expected " + std::to_string(m) + " tile rows");
  }
  std::vector<std::vector<Tile>> rows;
  std::vector<int> lefts;
  for (int r = 1; r <= m; ++r) {
    const auto& toks = lines[static_cast<std::size_t>(r)];
    if (static_cast<int>(toks.size()) != m + 2 - r) {
      throw std::invalid_argument("parse_ascii: row " + std::to_string(r) + " has the wrong tile count");
    }
    lefts.push_back(to_int(toks[0]));
    std::vector<Tile> row;
    for (std::size_t k = 1; k < toks.size(); ++k) {
      const auto& g = toks[k];
      if (g == "+") row.push_back(Tile::Cross);
      else if (g == ".") row.push_back(Tile::Bump);
      else if (g == "*") row.push_back(Tile::MarkedBump);
      else throw std::invalid_argument("parse_ascii: unknown tile glyph \"" + g + "\"");
    }
    rows.push_back(std::move(row));
  }
  PipeDream p(std::move(rows), std::move(labels));
  if (exit_word(p) != lefts) {
    throw std::invalid_argument("parse_ascii: left labels do not match the traced exit word");
  }
  return p;
}

}  // namespace grothpd

#pragma once

/**
 * @file reduction.hpp
 * @brief Removable pipes, the deletion/merging map Φ_j, the augmenting map
 * Ψ_j, core pipe dreams, and the core-count polynomials d_v(β), d_{u,v}(β).
 *
 * A pipe j of a marked reduced dream is removable when
 *   (i)   the column where j enters reads crosses then unmarked bumps, top to
 *         bottom (so every cross there carries j vertically);
 *   (ii)  no cross traversed by j has an unmarked bump directly above it;
 *   (iii) j traverses no marked bump.
 * A dream with no removable pipe is a core.
 *
 * Φ_j removes pipe j: its entry column is deleted, and in every column to the
 * left the tiles j occupies collapse (a cross it passes horizontally is
 * removed; a vertical bump pair it threads becomes a single bump). Tiles
 * below the collapse move up one row and columns to the right move left.
 * Ψ_j re-threads j and inverts Φ_j whenever the result is reduced.
 */

#include <optional>
#include <span>
#include <vector>

#include "grothpd/pipe_dream.hpp"
#include "grothpd/poly.hpp"

namespace grothpd {

struct CoreDream {
  PipeDream dream;
  /// The subword the dream represents (its exit word).
  Word word;

  friend auto operator<=>(const CoreDream&, const CoreDream&) = default;
  friend bool operator==(const CoreDream&, const CoreDream&) = default;
};

struct ReductionResult {
  CoreDream core;
  /// Labels deleted, in the order Φ_j was applied.
  std::vector<int> removed;
  /// Exit word of the dream that was reduced; fixes where each removed label
  /// sits when Ψ re-inserts it.
  Word origin;

  friend bool operator==(const ReductionResult&, const ReductionResult&) = default;
};

/// Throws std::invalid_argument if j is not a label of p.
bool is_removable(const PipeDream& p, int j);
bool is_removable(const PipeDream& p, const Routing& r, int j);

/// Labels of all removable pipes, ascending.
std::vector<int> removable_labels(const PipeDream& p);

bool is_core(const PipeDream& p);

/// Deletes removable pipe j. Throws std::invalid_argument if j is not
/// removable.
PipeDream phi_j(const PipeDream& p, int j);

/// Deletes removable pipes, smallest label first (recomputed after each
/// deletion), until none is left. Labels in `keep` are never deleted; with
/// an empty `keep` this is the full reduction map Φ, otherwise it is the
/// relative map Φ_u.
ReductionResult reduce_to_core(const PipeDream& p, std::span<const int> keep = {});

struct PsiResult {
  /// The threaded diagram; empty when j cannot be threaded into a staircase
  /// at all (the pointer runs past a column or onto a diagonal tile).
  std::optional<PipeDream> diagram;
  /// True iff a diagram was produced and it is reduced.
  bool valid = false;
};

/// Threads pipe j (not a label of p) into p so that it exits at 1-based
/// row `position` of the enlarged dream.
PsiResult psi_j(const PipeDream& p, int j, int position);

/// Ψ: re-inserts the removed labels in reverse order. Throws
/// std::invalid_argument if an intermediate diagram is not a marked reduced
/// dream.
PipeDream psi(const ReductionResult& r);

/// CMRPD(v): core dreams of v, sorted.
std::vector<CoreDream> enumerate_cmrpd(std::span<const int> v);
inline std::vector<CoreDream> enumerate_cmrpd(const Permutation& w) { return enumerate_cmrpd(w.oneline()); }

/// d_v(β) = Σ_{P ∈ CMRPD(v)} β^{mbt(P)}.
BetaPoly d_poly(std::span<const int> v);
inline BetaPoly d_poly(const Permutation& w) { return d_poly(w.oneline()); }

/// CMRPD(u,v): dreams of v in which every pipe of v outside u is
/// non-removable. Throws std::invalid_argument if u is not a subword of v.
std::vector<CoreDream> enumerate_cmrpd_rel(std::span<const int> u, std::span<const int> v);

/// d_{u,v}(β); zero when u is not a subword of v.
BetaPoly d_rel_poly(std::span<const int> u, std::span<const int> v);

}  // namespace grothpd

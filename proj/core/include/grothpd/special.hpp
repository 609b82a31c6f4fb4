#pragma once

/**
 * @file special.hpp
 * @brief Principal specialisations Υ_w(β) = 𝔊_w^(β)(1,...,1), the pattern
 * coefficients c_w(β), and alternating interval sums over subword lattices.
 */

#include <gmpxx.h>

#include <span>
#include <string_view>

#include "grothpd/permutation.hpp"
#include "grothpd/poly.hpp"

namespace grothpd {

class SpecCache;

enum class UpsilonMethod { PipeDreams, DividedDifferences };
enum class CMethod { InclusionExclusion, Recursive, Core };

UpsilonMethod parse_upsilon_method(std::string_view name);  // "pd" | "dd"
CMethod parse_c_method(std::string_view name);              // "ie" | "rec" | "core"

/// Υ_w(β). The pipe-dream route counts Σ_{P ∈ RPD(w)} (1+β)^{#markable(P)},
/// which is the MRPD sum with the mark subsets collected per reduced dream.
BetaPoly upsilon_beta(const Permutation& w, UpsilonMethod method = UpsilonMethod::PipeDreams);

/// Υ_w = Υ_w(0), the number of reduced pipe dreams.
mpz_class upsilon_schubert(const Permutation& w);

/// (1/ℓ!) Σ_{a ∈ Red(w)} a_1 ⋯ a_ℓ. Throws std::logic_error if ℓ! does not
/// divide the sum.
mpz_class macdonald_value(const Permutation& w);

/// c_w(β).
///   InclusionExclusion: Σ_{∅ ≤ v ≤ w} (-1)^{|w|-|v|} Υ_{perm(v)}(β).
///   Recursive: Υ_w(β) - Σ_{v ∈ S_m, m < n} c_v(β) p_v(w).
///   Core: d_w(β); only valid for 1423-avoiding w, otherwise throws
///   std::invalid_argument.
/// Υ values are taken from `cache` when one is supplied.
BetaPoly c_poly(const Permutation& w, CMethod method = CMethod::InclusionExclusion,
                SpecCache* cache = nullptr);

/// Σ_{u ≤ v ≤ w} (-1)^{|w|-|v|} Υ_{perm(v)}(β). Throws std::invalid_argument
/// if u is not a subword of w.
BetaPoly interval_sum(std::span<const int> u, const Permutation& w, SpecCache* cache = nullptr);

/// Σ_{v ≤ w} d_{perm(v)}(β) over all 2^n subwords.
BetaPoly core_count_sum(const Permutation& w);

const Permutation& pattern_1423();
const Permutation& pattern_1342();

}  // namespace grothpd

#pragma once

/**
 * @file poly.hpp
 * @brief Exact polynomials over Z: univariate in β (BetaPoly) and sparse
 * multivariate in β, x_1..x_n (MultiPoly), with the divided-difference
 * operators ∂_i and π_i = ∂_i (1 + β x_{i+1}).
 *
 * Coefficients are GMP integers, so nothing here can overflow.
 */

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "grothpd/permutation.hpp"

namespace grothpd {

/// Polynomial in β. coeffs()[d] is the coefficient of β^d; trailing zeros are
/// never stored, so the zero polynomial has no coefficients.
class BetaPoly {
 public:
  BetaPoly() = default;
  BetaPoly(std::initializer_list<long> coeffs);
  explicit BetaPoly(std::vector<mpz_class> coeffs);

  static BetaPoly constant(long c) { return BetaPoly{c}; }
  static BetaPoly beta_power(int d);

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int d) const;

  /// Value at β = b.
  mpz_class evaluate(long b) const;

  BetaPoly& operator+=(const BetaPoly& o);
  BetaPoly& operator-=(const BetaPoly& o);
  BetaPoly& operator*=(const BetaPoly& o);
  BetaPoly& operator*=(const mpz_class& k);
  /// Adds k·β^d.
  void add_term(int d, const mpz_class& k);

  friend BetaPoly operator+(BetaPoly a, const BetaPoly& b) { return a += b; }
  friend BetaPoly operator-(BetaPoly a, const BetaPoly& b) { return a -= b; }
  friend BetaPoly operator*(BetaPoly a, const BetaPoly& b) { return a *= b; }
  friend BetaPoly operator*(BetaPoly a, const mpz_class& k) { return a *= k; }
  friend bool operator==(const BetaPoly& a, const BetaPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Ascending coefficient list, "[3,3,1]"; the zero polynomial prints "[0]".
  std::string to_string() const;
  /// Human-readable "3 + 3β + β^2".
  std::string to_pretty_string() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

bool is_coeff_nonneg(const BetaPoly& p);
/// Coefficient-wise p <= q.
bool coeff_leq(const BetaPoly& p, const BetaPoly& q);

/// Exponent vector: slot 0 is the degree of β, slot i the degree of x_i.
using Exponent = std::vector<std::uint16_t>;

/// Sparse polynomial in β and x_1..x_n with integer coefficients. The
/// number of x variables is fixed at construction; arithmetic requires both
/// operands to agree on it.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, long c);
  /// The monomial x_i (1 <= i <= nvars).
  static MultiPoly x(int nvars, int i);
  static MultiPoly beta(int nvars);
  /// k · β^{e[0]} · x^{e[1..]}; e.size() must be nvars + 1.
  static MultiPoly monomial(int nvars, const Exponent& e, const mpz_class& k = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponent& e, const mpz_class& k);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const mpz_class& k);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const mpz_class& k) { return a *= k; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// s_i · f: exchanges x_i and x_{i+1}.
  MultiPoly swap_variables(int i) const;

  /// Terms with β-degree 0 (the β = 0 specialisation).
  MultiPoly beta_zero_slice() const;

  /// e.g. "x1^2 + b*x1*x2 - 3*b^2*x1"; zero prints "0".
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;
  int nvars_;
  std::map<Exponent, mpz_class> terms_;
};

/// ∂_i f = (f - s_i f) / (x_i - x_{i+1}). Requires 1 <= i < nvars.
/// Throws std::logic_error if the division leaves a remainder.
MultiPoly divided_difference(const MultiPoly& f, int i);

/// π_i f = ∂_i ((1 + β x_{i+1}) f).
MultiPoly pi_op(const MultiPoly& f, int i);

enum class AscentChoice { First, Last };

/// β-Grothendieck polynomial of w ∈ S_n (n >= 1) by descending from
/// 𝔊_{w_0} = x_1^{n-1} ... x_{n-1} with π operators; at each step the
/// first (or last) ascent of the current permutation is used.
MultiPoly grothendieck_via_dd(const Permutation& w, AscentChoice choice = AscentChoice::First);

/// x_i := 1 for every i, collected by β-degree.
BetaPoly specialize_ones(const MultiPoly& f);

}  // namespace grothpd

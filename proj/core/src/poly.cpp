#include "grothpd/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace grothpd {

// ---------------------------------------------------------------- BetaPoly

BetaPoly::BetaPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

BetaPoly::BetaPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

BetaPoly BetaPoly::beta_power(int d) {
  std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1, 0);
  c.back() = 1;
  return BetaPoly(std::move(c));
}

void BetaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class BetaPoly::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

mpz_class BetaPoly::evaluate(long b) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * b + *it;
  return acc;
}

void BetaPoly::add_term(int d, const mpz_class& k) {
  if (d < 0) throw std::out_of_range("BetaPoly::add_term: negative degree");
  if (coeffs_.size() <= static_cast<std::size_t>(d)) coeffs_.resize(static_cast<std::size_t>(d) + 1, 0);
  coeffs_[static_cast<std::size_t>(d)] += k;
  trim();
}

BetaPoly& BetaPoly::operator+=(const BetaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator-=(const BetaPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator*=(const BetaPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

BetaPoly& BetaPoly::operator*=(const mpz_class& k) {
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

std::string BetaPoly::to_string() const {
  if (is_zero()) return "[0]";
  std::string s = "[";
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d) s += ',';
    s += coeffs_[d].get_str();
  }
  return s + "]";
}

std::string BetaPoly::to_pretty_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const mpz_class& c = coeffs_[d];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0 || mag != 1) os << mag.get_str();
    if (d >= 1) os << "β";
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

bool is_coeff_nonneg(const BetaPoly& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(), [](const mpz_class& c) { return c >= 0; });
}

bool coeff_leq(const BetaPoly& p, const BetaPoly& q) {
  const int top = std::max(p.degree(), q.degree());
  for (int d = 0; d <= top; ++d)
    if (p.coeff(d) > q.coeff(d)) return false;
  return true;
}

// --------------------------------------------------------------- MultiPoly

MultiPoly MultiPoly::constant(int nvars, long c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars) + 1, 0), c);
  return p;
}

MultiPoly MultiPoly::x(int nvars, int i) {
  if (i < 1 || i > nvars) throw std::out_of_range("MultiPoly::x: variable index out of range");
  Exponent e(static_cast<std::size_t>(nvars) + 1, 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(nvars, e);
}

MultiPoly MultiPoly::beta(int nvars) {
  Exponent e(static_cast<std::size_t>(nvars) + 1, 0);
  e[0] = 1;
  return monomial(nvars, e);
}

MultiPoly MultiPoly::monomial(int nvars, const Exponent& e, const mpz_class& k) {
  MultiPoly p(nvars);
  p.add_term(e, k);
  return p;
}

void MultiPoly::add_term(const Exponent& e, const mpz_class& k) {
  if (e.size() != static_cast<std::size_t>(nvars_) + 1) {
    throw std::invalid_argument("MultiPoly::add_term: exponent vector has wrong length");
  }
  if (k == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: variable count mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, k] : o.terms_) add_term(e, k);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, k] : o.terms_) add_term(e, -k);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const mpz_class& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= k;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_) + 1);
  for (const auto& [ea, ka] : a.terms_) {
    for (const auto& [eb, kb] : b.terms_) {
      for (std::size_t s = 0; s < e.size(); ++s) e[s] = static_cast<std::uint16_t>(ea[s] + eb[s]);
      out.add_term(e, ka * kb);
    }
  }
  return out;
}

MultiPoly MultiPoly::swap_variables(int i) const {
  if (i < 1 || i >= nvars_) throw std::out_of_range("swap_variables: index out of range");
  MultiPoly out(nvars_);
  for (const auto& [e, k] : terms_) {
    Exponent f = e;
    std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i) + 1]);
    out.add_term(f, k);
  }
  return out;
}

MultiPoly MultiPoly::beta_zero_slice() const {
  MultiPoly out(nvars_);
  for (const auto& [e, k] : terms_)
    if (e[0] == 0) out.terms_.emplace(e, k);
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, k] : terms_) {
    mpz_class mag = abs(k);
    if (first) {
      if (k < 0) os << '-';
    } else {
      os << (k < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (e[0] > 0) factors.push_back(e[0] == 1 ? "b" : "b^" + std::to_string(e[0]));
    for (std::size_t v = 1; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      std::string f = "x" + std::to_string(v);
      if (e[v] > 1) f += "^" + std::to_string(e[v]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
  }
  return os.str();
}

// ---------------------------------------------------- divided differences

MultiPoly divided_difference(const MultiPoly& f, int i) {
  if (i < 1 || i >= f.nvars()) throw std::out_of_range("divided_difference: index out of range");
  const auto xi = static_cast<std::size_t>(i);
  const auto xj = xi + 1;

  // Long division of the antisymmetrisation by (x_i - x_{i+1}), treating x_i
  // as the main variable. The highest remaining x_i-power is cleared each
  // step; what is left at x_i-degree 0 is the remainder.
  MultiPoly num = f - f.swap_variables(i);
  std::map<Exponent, mpz_class> work(num.terms().begin(), num.terms().end());
  MultiPoly quotient(f.nvars());

  for (;;) {
    auto lead = work.end();
    for (auto it = work.begin(); it != work.end(); ++it) {
      if (it->first[xi] > 0 && (lead == work.end() || it->first[xi] > lead->first[xi])) lead = it;
    }
    if (lead == work.end()) break;

    Exponent q = lead->first;
    const mpz_class k = lead->second;
    q[xi] -= 1;
    quotient.add_term(q, k);
    work.erase(lead);
    // work -= k x^q (x_i - x_{i+1}); the x_i part was the erased lead term.
    Exponent carry = q;
    carry[xj] += 1;
    auto [it, inserted] = work.try_emplace(carry, k);
    if (!inserted) {
      it->second += k;
      if (it->second == 0) work.erase(it);
    }
  }
  if (!work.empty()) {
    throw std::logic_error("divided_difference: nonzero remainder (arithmetic invariant violated)");
  }
  return quotient;
}

MultiPoly pi_op(const MultiPoly& f, int i) {
  const int n = f.nvars();
  MultiPoly factor = MultiPoly::constant(n, 1) + MultiPoly::beta(n) * MultiPoly::x(n, i + 1);
  return divided_difference(f * factor, i);
}

MultiPoly grothendieck_via_dd(const Permutation& w, AscentChoice choice) {
  const int n = w.size();
  if (n == 0) return MultiPoly::constant(0, 1);

  // Climb from w to w_0 through ascents, remembering the indices used.
  std::vector<int> climb;
  Permutation cur = w;
  while (cur.length() < n * (n - 1) / 2) {
    int pick = 0;
    for (int i = 1; i < n; ++i) {
      if (cur(i) < cur(i + 1)) {
        pick = i;
        if (choice == AscentChoice::First) break;
      }
    }
    climb.push_back(pick);
    cur = cur.times_simple(pick);
  }

  Exponent top(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v < n; ++v) top[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(n - v);
  MultiPoly g = MultiPoly::monomial(n, top);
  for (auto it = climb.rbegin(); it != climb.rend(); ++it) g = pi_op(g, *it);
  return g;
}

BetaPoly specialize_ones(const MultiPoly& f) {
  BetaPoly out;
  for (const auto& [e, k] : f.terms()) out.add_term(e[0], k);
  return out;
}

}  // namespace grothpd

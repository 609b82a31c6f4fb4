// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <string>

#include "grothpd/pipe_dream.hpp"
#include "grothpd/reduction.hpp"
#include "grothpd/spec_cache.hpp"
#include "grothpd/special.hpp"
#include "grothpd/verify.hpp"
#include "support.hpp"

using namespace grothpd;
using grothpd::testing::dream;
using grothpd::testing::perm;

namespace {

SpecCache g_cache;

MultiPoly mono(int nvars, std::vector<std::uint16_t> xs, std::uint16_t b = 0) {
  Exponent e{b};
  e.insert(e.end(), xs.begin(), xs.end());
  e.resize(static_cast<std::size_t>(nvars) + 1, 0);
  return MultiPoly::monomial(nvars, e);
}

// Each criterion returns an empty string on success, otherwise a reason.
using Criterion = std::function<std::string()>;

std::string check_report(const CheckReport& r) {
  if (r.ok() && r.passes == r.universe_size) return {};
  return r.check_name + " " + r.summary() + "\n" + r.to_table();
}

std::string c1() {
  const BetaPoly want{3, 3, 1};
  const BetaPoly pd = upsilon_beta(perm("2143"), UpsilonMethod::PipeDreams);
  const BetaPoly dd = upsilon_beta(perm("2143"), UpsilonMethod::DividedDifferences);
  if (pd != want || dd != want) return "pd " + pd.to_string() + ", dd " + dd.to_string();
  return {};
}

std::string c2() {
  const MultiPoly want = mono(4, {2}) + mono(4, {1, 1}) + mono(4, {1, 0, 1}) + mono(4, {2, 1}, 1) +
                         mono(4, {2, 0, 1}, 1) + mono(4, {1, 1, 1}, 1) + mono(4, {2, 1, 1}, 2);
  const MultiPoly pd = grothendieck_via_pd(perm("2143")), dd = grothendieck_via_dd(perm("2143"));
  if (!(pd == want)) return "pd gives " + pd.to_string();
  if (!(dd == want)) return "dd gives " + dd.to_string();
  return {};
}

std::string c3() {
  const auto rpd = enumerate_rpd(perm("2143"));
  const auto mrpd = enumerate_mrpd(perm("2143"));
  const auto cores = enumerate_cmrpd(perm("2143"));
  std::multiset<int> marks;
  for (const auto& c : cores) marks.insert(mbt(c.dream));
  if (rpd.size() != 3 || mrpd.size() != 7 || cores.size() != 2 || marks != std::multiset<int>{1, 2}) {
    return "|RPD|=" + std::to_string(rpd.size()) + " |MRPD|=" + std::to_string(mrpd.size()) +
           " |CMRPD|=" + std::to_string(cores.size());
  }
  return {};
}

std::string c4() {
  for (const auto& w : all_permutations(4))
    if (!(grothendieck_via_pd(w) == grothendieck_via_dd(w))) return "S_4 mismatch at " + w.to_string();
  std::mt19937 gen(20240521);
  std::vector<int> v{1, 2, 3, 4, 5};
  for (int k = 0; k < 50; ++k) {
    std::shuffle(v.begin(), v.end(), gen);
    const Permutation w(v);
    if (!(grothendieck_via_pd(w) == grothendieck_via_dd(w))) return "S_5 mismatch at " + w.to_string();
  }
  return {};
}

std::string c5() { return check_report(verify("macdonald", 5)); }

std::string c6() {
  if (auto r = check_report(verify("phi_psi_roundtrip", 5)); !r.empty()) return r;
  int pairs = 0;
  for (const auto& w : all_permutations(4))
    for (const auto& p : enumerate_mrpd(w)) {
      const auto labels = removable_labels(p);
      for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = a + 1; b < labels.size(); ++b) {
          const PipeDream pa = phi_j(p, labels[a]), pb = phi_j(p, labels[b]);
          if (!is_removable(pa, labels[b]) || !is_removable(pb, labels[a]) ||
              phi_j(pa, labels[b]) != phi_j(pb, labels[a])) {
            return "commutation fails on " + p.tile_string();
          }
          ++pairs;
        }
    }
  if (pairs == 0) return "no dream with two removable pipes";
  return {};
}

std::string c7() {
  for (int n = 0; n <= 5; ++n)
    if (auto r = check_report(verify("bijection_1423", n)); !r.empty()) return r;

  std::multiset<CoreDream> image, target;
  for (const auto& p : enumerate_mrpd(perm("1423"))) image.insert(reduce_to_core(p).core);
  for (const auto& v : subwords(perm("1423")))
    for (auto& c : enumerate_cmrpd(v.labels)) target.insert(std::move(c));
  for (const auto& c : image) {
    auto it = target.find(c);
    if (it == target.end()) return "1423 image has a dream outside the cores: " + c.dream.tile_string();
    target.erase(it);
  }
  const std::multiset<CoreDream> missed{
      CoreDream{dream("BBB/XB/B", {1, 3, 4}), {1, 4, 3}},
      CoreDream{dream("BXB/MB/B", {1, 3, 4}), {1, 4, 3}},
  };
  if (target != missed) return "1423 misses " + std::to_string(target.size()) + " cores, not the expected two";
  return {};
}

std::string c8() { return check_report(verify("thm_c_equals_d", 6, 1, &g_cache)); }

std::string c9() {
  for (const auto& w : all_permutations(4)) {
    if (!avoids(w, pattern_1423())) continue;
    const auto us = subwords(w);
    if (us.size() != 16) return "expected 16 subwords";
    for (const auto& u : us) {
      const BetaPoly s = interval_sum(u.labels, w, &g_cache);
      const BetaPoly d = d_rel_poly(u.labels, w.oneline());
      if (s != d || !is_coeff_nonneg(s)) {
        return "w=" + w.to_string() + " u=[" + word_to_string(u.labels) + "] sum " + s.to_string() + " d " +
               d.to_string();
      }
    }
  }
  return {};
}

std::string c10() { return check_report(verify("inverse_conservation", 5, 1, &g_cache)); }

std::string c11() { return check_report(verify("upper_bound", 5, 1, &g_cache)); }

std::string c12() {
  const CheckReport r = verify("c_nonneg_all", 6, 1, &g_cache);
  if (!r.ok()) {
    std::cerr << "c_w(β) has a negative coefficient; witness dump follows\n" << r.to_json() << '\n';
    std::cout << "FAIL 12 c_w nonnegative for all w in S_6 (aborting)" << std::endl;
    std::exit(1);
  }
  return check_report(r);
}

std::string c13() {
  const auto p = count_pattern(perm("132"), perm("1432"));
  const Permutation q = pattern_of(std::vector<int>{2, 5, 7, 4});
  if (p != 3 || q != perm("1342")) return "p=" + std::to_string(p) + " pattern=" + q.to_string();
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"upsilon of 2143 is 3+3b+b^2 by pd and dd", c1},
      {"Grothendieck polynomial of 2143 term for term", c2},
      {"2143 has 3 reduced, 7 marked and 2 core dreams (mbt 1, 2)", c3},
      {"pipe dreams equal divided differences on S_4 and 50 random S_5", c4},
      {"Macdonald formula on S_5", c5},
      {"psi(reduce(P)) = P on S_5, phi commutation on S_4", c6},
      {"reduction is a bijection onto cores for 1423-avoiders, n <= 5; 1423 misses two", c7},
      {"c_w = d_w for 1423-avoiding w in S_6", c8},
      {"interval sums equal relative core counts on 1423-avoiders of S_4", c9},
      {"inverse conservation of c_w and upsilon on S_5", c10},
      {"upsilon bounded by core counts on S_5", c11},
      {"c_w nonnegative for all w in S_6", c12},
      {"pattern statistics p_132(1432) = 3, pattern of 2574 = 1342", c13},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::string reason;
    try {
      reason = criteria[k].second();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << (reason.empty() ? "PASS " : "FAIL ") << k + 1 << ' ' << criteria[k].first << " (" << ms << " ms)\n";
    if (!reason.empty()) {
      std::cout << "     " << reason << '\n';
      ++failed;
    }
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << '/' << criteria.size()
            << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}

#include "grothpd/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "grothpd/parallel.hpp"
#include "grothpd/pipe_dream.hpp"
#include "grothpd/reduction.hpp"
#include "grothpd/spec_cache.hpp"
#include "grothpd/special.hpp"
#include "json_codec.hpp"

namespace grothpd {

namespace {

using Outcome = std::optional<Witness>;
using CheckFn = std::function<Outcome(const Permutation&, SpecCache&)>;

struct CheckDef {
  const char* id;
  // Empty pattern means all of S_n.
  std::optional<Permutation> avoid;
  bool needs_cache;
  CheckFn run;
};

Outcome fail(const Permutation& w, std::string expected, std::string got) {
  return Witness{w, std::move(expected), std::move(got)};
}

Outcome roundtrip(const Permutation& w, SpecCache&) {
  std::vector<PipeDream> images;
  for (const auto& p : enumerate_mrpd(w)) {
    const ReductionResult r = reduce_to_core(p);
    PipeDream back;
    try {
      back = psi(r);
    } catch (const std::exception& e) {
      return fail(w, p.tile_string(), std::string("psi threw: ") + e.what());
    }
    if (back != p) return fail(w, p.tile_string(), back.tile_string());
    images.push_back(r.core.dream);
  }
  // Φ is injective on MRPD(w) once the removed labels are fixed; with the
  // word known the core alone must therefore determine the dream.
  std::sort(images.begin(), images.end());
  if (auto dup = std::adjacent_find(images.begin(), images.end()); dup != images.end()) {
    return fail(w, "distinct cores", "repeated core " + dup->tile_string());
  }
  return std::nullopt;
}

Outcome commute(const Permutation& w, SpecCache&) {
  for (const auto& p : enumerate_mrpd(w)) {
    const auto labels = removable_labels(p);
    for (std::size_t a = 0; a < labels.size(); ++a) {
      const PipeDream once = phi_j(p, labels[a]);
      const auto after = removable_labels(once);
      for (std::size_t b = 0; b < labels.size(); ++b) {
        if (a == b) continue;
        if (!std::binary_search(after.begin(), after.end(), labels[b])) {
          return fail(w, p.tile_string() + ": " + std::to_string(labels[b]) + " stays removable after deleting " +
                             std::to_string(labels[a]),
                      "not removable");
        }
        if (b < a) continue;
        const PipeDream ab = phi_j(once, labels[b]);
        const PipeDream ba = phi_j(phi_j(p, labels[b]), labels[a]);
        if (ab != ba) return fail(w, ab.tile_string(), ba.tile_string());
      }
      // Deleting a pipe never makes a non-removable pipe removable.
      for (int j : after) {
        if (!std::binary_search(labels.begin(), labels.end(), j)) {
          return fail(w, p.tile_string() + ": removable set shrinks",
                      std::to_string(j) + " became removable");
        }
      }
    }
  }
  return std::nullopt;
}

Outcome bijection(const Permutation& w, SpecCache&) {
  std::vector<CoreDream> image;
  for (const auto& p : enumerate_mrpd(w)) image.push_back(reduce_to_core(p).core);
  std::vector<CoreDream> target;
  for (const auto& v : subwords(w)) {
    auto cores = enumerate_cmrpd(v.labels);
    target.insert(target.end(), cores.begin(), cores.end());
  }
  std::sort(image.begin(), image.end());
  std::sort(target.begin(), target.end());
  if (image != target) {
    return fail(w, std::to_string(target.size()) + " cores over all subwords",
                std::to_string(image.size()) + " images, multisets differ");
  }
  return std::nullopt;
}

Outcome c_equals_d(const Permutation& w, SpecCache& cache) {
  const BetaPoly c = c_poly(w, CMethod::InclusionExclusion, &cache);
  const BetaPoly d = d_poly(w);
  if (c != d) return fail(w, d.to_string(), c.to_string());
  return std::nullopt;
}

Outcome inverse_conservation(const Permutation& w, SpecCache& cache) {
  const Permutation wi = w.inverse();
  const BetaPoly u = cache.get(w), ui = cache.get(wi);
  if (u != ui) return fail(w, "upsilon " + u.to_string(), "upsilon of inverse " + ui.to_string());
  const BetaPoly c = c_poly(w, CMethod::InclusionExclusion, &cache);
  const BetaPoly ci = c_poly(wi, CMethod::InclusionExclusion, &cache);
  if (c != ci) return fail(w, "c " + c.to_string(), "c of inverse " + ci.to_string());
  return std::nullopt;
}

Outcome c_nonneg(const Permutation& w, SpecCache& cache) {
  const BetaPoly c = c_poly(w, CMethod::InclusionExclusion, &cache);
  if (!is_coeff_nonneg(c)) return fail(w, "nonnegative coefficients", c.to_string());
  return std::nullopt;
}

Outcome nonneg_1342(const Permutation& w, SpecCache& cache) {
  const BetaPoly c = c_poly(w, CMethod::InclusionExclusion, &cache);
  const BetaPoly d = d_poly(w.inverse());
  if (c != d) return fail(w, "d of inverse " + d.to_string(), c.to_string());
  if (!is_coeff_nonneg(c)) return fail(w, "nonnegative coefficients", c.to_string());
  return std::nullopt;
}

Outcome interval(const Permutation& w, SpecCache& cache) {
  for (const auto& u : subwords(w)) {
    const BetaPoly s = interval_sum(u.labels, w, &cache);
    const BetaPoly d = d_rel_poly(u.labels, w.oneline());
    if (s != d) return fail(w, "u=[" + word_to_string(u.labels) + "] d_rel " + d.to_string(), s.to_string());
    if (!is_coeff_nonneg(s)) {
      return fail(w, "u=[" + word_to_string(u.labels) + "] nonnegative", s.to_string());
    }
  }
  return std::nullopt;
}

Outcome upper_bound(const Permutation& w, SpecCache& cache) {
  const BetaPoly u = cache.get(w);
  const BetaPoly bound = core_count_sum(w);
  if (!coeff_leq(u, bound)) return fail(w, "<= " + bound.to_string(), u.to_string());
  return std::nullopt;
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"oracle_dd", std::nullopt, false,
       [](const Permutation& w, SpecCache&) -> Outcome {
         const MultiPoly pd = grothendieck_via_pd(w);
         const MultiPoly dd = grothendieck_via_dd(w);
         if (!(pd == dd)) return fail(w, dd.to_string(), pd.to_string());
         return std::nullopt;
       }},
      {"macdonald", std::nullopt, false,
       [](const Permutation& w, SpecCache&) -> Outcome {
         const mpz_class m = macdonald_value(w), s = upsilon_schubert(w);
         if (m != s) return fail(w, s.get_str(), m.get_str());
         return std::nullopt;
       }},
      {"phi_psi_roundtrip", std::nullopt, false, roundtrip},
      {"phi_commute", std::nullopt, false, commute},
      {"bijection_1423", pattern_1423(), false, bijection},
      {"thm_c_equals_d", pattern_1423(), true, c_equals_d},
      {"inverse_conservation", std::nullopt, true, inverse_conservation},
      {"dennin_nonneg_1423", pattern_1423(), true, c_nonneg},
      {"dennin_nonneg_1342", pattern_1342(), true, nonneg_1342},
      {"mt_interval", pattern_1423(), true, interval},
      {"upper_bound", std::nullopt, true, upper_bound},
      {"c_nonneg_all", std::nullopt, true, c_nonneg},
  };
  return defs;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string CheckReport::summary() const {
  return std::to_string(passes) + "/" + std::to_string(universe_size) + " pass";
}

std::string CheckReport::to_json() const {
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : failures) fs.push_back({{"w", f.w.to_string()}, {"expected", f.expected}, {"got", f.got}});
  nlohmann::json doc{{"check", check_name}, {"universe", universe}, {"universe_size", universe_size},
                     {"passes", passes}, {"failures", fs}};
  return doc.dump(2);
}

std::string CheckReport::to_table() const {
  std::ostringstream out;
  out << "check     " << check_name << '\n'
      << "universe  " << universe << '\n'
      << "result    " << summary() << '\n';
  if (!failures.empty()) {
    std::size_t ww = 1, we = 8;
    for (const auto& f : failures) {
      ww = std::max(ww, f.w.to_string().size());
      we = std::max(we, f.expected.size());
    }
    out << '\n' << pad("w", ww) << "  " << pad("expected", we) << "  got\n";
    for (const auto& f : failures) {
      out << pad(f.w.to_string(), ww) << "  " << pad(f.expected, we) << "  " << f.got << '\n';
    }
  }
  return out.str();
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.emplace_back(d.id);
    return v;
  }();
  return ids;
}

CheckReport verify(std::string_view check, int n, int jobs, SpecCache* cache) {
  const auto& defs = registry();
  auto it = std::find_if(defs.begin(), defs.end(), [&](const CheckDef& d) { return check == d.id; });
  if (it == defs.end()) {
    std::string known;
    for (const auto& id : check_ids()) known += (known.empty() ? "" : ", ") + id;
    throw std::invalid_argument("unknown check \"" + std::string(check) + "\" (known: " + known + ")");
  }
  if (n < 0) throw std::invalid_argument("verify: n must be nonnegative");

  CheckReport report;
  report.check_name = it->id;
  std::vector<Permutation> universe;
  for (auto& w : all_permutations(n))
    if (!it->avoid || avoids(w, *it->avoid)) universe.push_back(std::move(w));
  report.universe = (it->avoid ? it->avoid->to_compact_string() + "-avoiding w in S_" : "all w in S_") +
                    std::to_string(n);
  report.universe_size = universe.size();

  SpecCache local;
  SpecCache& table = cache ? *cache : local;
  if (it->needs_cache) table.prefill(n, jobs);

  std::vector<Outcome> outcomes(universe.size());
  parallel_for(universe.size(), jobs, [&](std::size_t k) { outcomes[k] = it->run(universe[k], table); });
  for (auto& o : outcomes) {
    if (o) report.failures.push_back(std::move(*o));
    else ++report.passes;
  }
  return report;
}

}  // namespace grothpd

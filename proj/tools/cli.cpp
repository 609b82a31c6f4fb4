#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "grothpd/io.hpp"
#include "grothpd/parallel.hpp"
#include "grothpd/pipe_dream.hpp"
#include "grothpd/reduction.hpp"
#include "grothpd/spec_cache.hpp"
#include "grothpd/special.hpp"
#include "grothpd/verify.hpp"

namespace grothpd::cli {

namespace {

constexpr int kSweepMax = 8;
constexpr const char* kCacheEnv = "GROTHPD_CACHE";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

// Cache file handling: loaded if present, written back after the command.
class CacheFile {
 public:
  CacheFile(std::string path, std::ostream& err) : path_(std::move(path)) {
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    try {
      cache_.load(path_);
      loaded_ = cache_.size();
    } catch (const std::exception& e) {
      err << "warning: ignoring cache " << path_ << ": " << e.what() << '\n';
    }
  }

  SpecCache* get() { return &cache_; }

  void flush(std::ostream& err) {
    if (path_.empty() || cache_.size() == loaded_) return;
    try {
      cache_.save(path_);
    } catch (const std::exception& e) {
      err << "warning: " << e.what() << '\n';
    }
  }

 private:
  std::string path_;
  SpecCache cache_;
  std::size_t loaded_ = 0;
};

void print_dreams(const std::vector<PipeDream>& dreams, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << "[\n";
    for (std::size_t k = 0; k < dreams.size(); ++k) {
      out << to_json(dreams[k]) << (k + 1 < dreams.size() ? ",\n" : "\n");
    }
    out << "]\n";
    return;
  }
  for (std::size_t k = 0; k < dreams.size(); ++k) {
    if (k) out << '\n';
    const std::string text = render_ascii(dreams[k]);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
  }
}

int sweep(int n, const std::string& path, int jobs, SpecCache& cache, std::ostream& out, std::ostream& err) {
  if (n < 1 || n > kSweepMax) {
    err << "sweep: n = " << n << " is outside the supported range 1.." << kSweepMax
        << " (S_" << n << " is too large to sweep exhaustively)\n";
    return kUsage;
  }
  cache.prefill(n, jobs);
  const auto perms = all_permutations(n);
  struct Row {
    BetaPoly upsilon, c;
  };
  std::vector<Row> rows(perms.size());
  parallel_for(perms.size(), jobs, [&](std::size_t k) {
    rows[k] = {cache.get(perms[k]), c_poly(perms[k], CMethod::InclusionExclusion, &cache)};
  });

  std::ofstream file(path);
  if (!file) {
    err << "sweep: cannot write " << path << '\n';
    return kUsage;
  }
  file << "w,avoids1423,avoids1342,upsilon_coeffs,c_coeffs,c_nonneg\n";
  std::vector<std::size_t> bad;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    const bool nonneg = is_coeff_nonneg(rows[k].c);
    if (!nonneg) bad.push_back(k);
    file << csv_field(perms[k].to_string()) << ',' << (avoids(perms[k], pattern_1423()) ? "true" : "false") << ','
         << (avoids(perms[k], pattern_1342()) ? "true" : "false") << ',' << csv_field(rows[k].upsilon.to_string())
         << ',' << csv_field(rows[k].c.to_string()) << ',' << (nonneg ? "true" : "false") << '\n';
  }
  out << "wrote " << perms.size() << " rows to " << path << '\n';
  if (!bad.empty()) {
    err << "c_w has a negative coefficient for " << bad.size() << " permutation(s):\n";
    for (std::size_t k : bad) {
      err << "  w = " << perms[k].to_string() << "  upsilon = " << rows[k].upsilon.to_string()
          << "  c = " << rows[k].c.to_string() << '\n';
    }
    return kCheckFailed;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Principal specialisations of β-Grothendieck polynomials via pipe dreams", "grothpd"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string cache_path;
  if (const char* env = std::getenv(kCacheEnv)) cache_path = env;
  app.add_option("--cache", cache_path, std::string("Υ cache file (default: $") + kCacheEnv + ")");

  std::string w_text, u_text, method, kind = "rpd", format, out_path, check;
  std::string rel;
  int n = 0, jobs = 1;

  auto* upsilon = app.add_subcommand("upsilon", "Print Υ_w(β) as ascending coefficients");
  upsilon->add_option("W", w_text, "permutation, e.g. 2143 or 2,1,4,3")->required();
  upsilon->add_option("--method", method, "pd or dd")->check(CLI::IsMember({"pd", "dd"}));

  auto* cw = app.add_subcommand("cw", "Print c_w(β)");
  cw->add_option("W", w_text)->required();
  cw->add_option("--method", method, "ie, rec or core")->check(CLI::IsMember({"ie", "rec", "core"}));

  auto* dpoly = app.add_subcommand("dpoly", "Print d_w(β), or d_{u,w}(β) with --rel");
  dpoly->add_option("W", w_text)->required();
  dpoly->add_option("--rel", rel, "subword u of W");

  auto* interval = app.add_subcommand("interval", "Alternating Υ sum over the interval [U, W]");
  interval->add_option("U", u_text, "subword of W (use () for the empty word)")->required();
  interval->add_option("W", w_text)->required();

  auto* enumerate = app.add_subcommand("enumerate", "List pipe dreams of W");
  enumerate->add_option("W", w_text)->required();
  enumerate->add_option("--kind", kind, "rpd, mrpd or core")->check(CLI::IsMember({"rpd", "mrpd", "core"}));
  enumerate->add_option("--format", format, "ascii or json")->check(CLI::IsMember({"ascii", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run an exhaustive check over S_n");
  verify_cmd->add_option("CHECK", check)->required()->check(CLI::IsMember(check_ids()));
  verify_cmd->add_option("--n", n, "rank")->required()->check(CLI::Range(0, 9));
  verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "Write Υ_w and c_w for all of S_n as CSV");
  sweep_cmd->add_option("--n", n, "rank")->required();
  sweep_cmd->add_option("--out", out_path, "CSV file")->required();
  sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  CacheFile cache(cache_path, err);
  int status = kOk;
  try {
    if (upsilon->parsed()) {
      const Permutation w = parse_permutation(w_text);
      const auto m = parse_upsilon_method(method.empty() ? "pd" : method);
      out << (m == UpsilonMethod::PipeDreams ? cache.get()->get(w) : upsilon_beta(w, m)).to_string() << '\n';
    } else if (cw->parsed()) {
      const Permutation w = parse_permutation(w_text);
      out << c_poly(w, parse_c_method(method.empty() ? "ie" : method), cache.get()).to_string() << '\n';
    } else if (dpoly->parsed()) {
      const Word w = parse_word(w_text);
      if (dpoly->count("--rel")) out << d_rel_poly(parse_word(rel), w).to_string() << '\n';
      else out << d_poly(perm_from_oneline(w)).to_string() << '\n';
    } else if (interval->parsed()) {
      const Permutation w = parse_permutation(w_text);
      out << interval_sum(parse_word(u_text), w, cache.get()).to_string() << '\n';
    } else if (enumerate->parsed()) {
      const Permutation w = parse_permutation(w_text);
      std::vector<PipeDream> dreams;
      if (kind == "rpd") dreams = enumerate_rpd(w);
      else if (kind == "mrpd") dreams = enumerate_mrpd(w);
      else
        for (auto& c : enumerate_cmrpd(w)) dreams.push_back(std::move(c.dream));
      print_dreams(dreams, format.empty() ? "ascii" : format, out);
    } else if (verify_cmd->parsed()) {
      const CheckReport report = verify(check, n, jobs, cache.get());
      out << (format == "json" ? report.to_json() + "\n" : report.to_table());
      status = report.ok() ? kOk : kCheckFailed;
    } else if (sweep_cmd->parsed()) {
      status = sweep(n, out_path, jobs, *cache.get(), out, err);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  cache.flush(err);
  return status;
}

}  // namespace grothpd::cli

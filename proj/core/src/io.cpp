#include "grothpd/io.hpp"

#include <stdexcept>

#include "json_codec.hpp"

namespace grothpd {

using nlohmann::json;

namespace {

template <class Fn>
auto parse_with(const std::string& text, const char* what, Fn&& fn) {
  try {
    return fn(json::parse(text));
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Tile tile_from_code(const std::string& code) {
  if (code == "B") return Tile::Bump;
  if (code == "X") return Tile::Cross;
  if (code == "MB") return Tile::MarkedBump;
  throw std::invalid_argument("unknown tile code \"" + code + "\" (expected B, X or MB)");
}

const char* tile_code(Tile t) {
  switch (t) {
    case Tile::Bump: return "B";
    case Tile::Cross: return "X";
    case Tile::MarkedBump: return "MB";
  }
  return "?";
}

}  // namespace

json integer_to_json_value(const mpz_class& k) {
  if (k.fits_slong_p()) return k.get_si();
  return k.get_str();
}

mpz_class integer_from_json_value(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class k;
    if (k.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("bad integer string");
    return k;
  }
  throw std::invalid_argument("expected an integer");
}

json beta_poly_to_json_value(const BetaPoly& p) {
  json out = json::array();
  if (p.is_zero()) {
    out.push_back(0);
    return out;
  }
  for (const auto& c : p.coeffs()) out.push_back(integer_to_json_value(c));
  return out;
}

BetaPoly beta_poly_from_json_value(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("β-polynomial must be a JSON array");
  std::vector<mpz_class> c;
  for (const auto& e : j) c.push_back(integer_from_json_value(e));
  return BetaPoly(std::move(c));
}

json multi_poly_to_json_value(const MultiPoly& p) {
  json out = json::array();
  for (const auto& [e, k] : p.terms()) {
    json xs = json::array();
    for (std::size_t v = 1; v < e.size(); ++v) xs.push_back(e[v]);
    out.push_back({{"beta", e[0]}, {"x", xs}, {"c", integer_to_json_value(k)}});
  }
  return out;
}

json pipe_dream_to_json_value(const PipeDream& p) {
  json rows = json::array();
  for (const auto& row : p.rows()) {
    json r = json::array();
    for (Tile t : row) r.push_back(tile_code(t));
    rows.push_back(std::move(r));
  }
  return {{"rank", p.rank()}, {"labels", p.labels()}, {"rows", rows}};
}

PipeDream pipe_dream_from_json_value(const json& j) {
  const int rank = j.at("rank").get<int>();
  std::vector<int> labels = j.contains("labels") ? j.at("labels").get<std::vector<int>>() : std::vector<int>{};
  std::vector<std::vector<Tile>> rows;
  for (const auto& r : j.at("rows")) {
    std::vector<Tile> row;
    for (const auto& t : r) row.push_back(tile_from_code(t.get<std::string>()));
    rows.push_back(std::move(row));
  }
  if (static_cast<int>(rows.size()) != rank) {
    throw std::invalid_argument("pipe dream JSON: rank " + std::to_string(rank) + " but " +
                                std::to_string(rows.size()) + " rows");
  }
  return PipeDream(std::move(rows), std::move(labels));
}

json reduction_to_json_value(const ReductionResult& r) {
  return {{"core", pipe_dream_to_json_value(r.core.dream)}, {"removed", r.removed}, {"word", r.origin}};
}

ReductionResult reduction_from_json_value(const json& j) {
  ReductionResult r;
  r.core.dream = pipe_dream_from_json_value(j.at("core"));
  r.core.word = exit_word(r.core.dream);
  r.removed = j.at("removed").get<std::vector<int>>();
  r.origin = j.at("word").get<std::vector<int>>();
  return r;
}

std::string to_json(const BetaPoly& p) { return beta_poly_to_json_value(p).dump(); }

BetaPoly beta_poly_from_json(const std::string& text) {
  return parse_with(text, "β-polynomial", [](const json& j) { return beta_poly_from_json_value(j); });
}

std::string to_json(const MultiPoly& p) { return multi_poly_to_json_value(p).dump(); }

std::string to_json(const PipeDream& p) { return pipe_dream_to_json_value(p).dump(); }

PipeDream pipe_dream_from_json(const std::string& text) {
  return parse_with(text, "pipe dream", [](const json& j) { return pipe_dream_from_json_value(j); });
}

std::string to_json(const ReductionResult& r) { return reduction_to_json_value(r).dump(); }

ReductionResult reduction_result_from_json(const std::string& text) {
  return parse_with(text, "reduction", [](const json& j) { return reduction_from_json_value(j); });
}

}  // namespace grothpd

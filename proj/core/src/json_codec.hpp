#pragma once

// nlohmann::json codecs shared by the serialisers. Private to the core
// library: public headers expose JSON only as text.

#include "grothpd/pipe_dream.hpp"
#include "grothpd/poly.hpp"
#include "grothpd/reduction.hpp"
#include "json.hpp"

namespace grothpd {

/// Integers that fit a long become JSON numbers, larger ones decimal strings.
nlohmann::json integer_to_json_value(const mpz_class& k);
mpz_class integer_from_json_value(const nlohmann::json& j);

nlohmann::json beta_poly_to_json_value(const BetaPoly& p);
BetaPoly beta_poly_from_json_value(const nlohmann::json& j);

nlohmann::json multi_poly_to_json_value(const MultiPoly& p);

nlohmann::json pipe_dream_to_json_value(const PipeDream& p);
PipeDream pipe_dream_from_json_value(const nlohmann::json& j);

nlohmann::json reduction_to_json_value(const ReductionResult& r);
ReductionResult reduction_from_json_value(const nlohmann::json& j);

}  // namespace grothpd

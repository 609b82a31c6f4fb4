#pragma once

/**
 * @file io.hpp
 * @brief JSON text forms.
 *
 *   BetaPoly        [3,3,1]  (ascending in β; zero is [0])
 *   MultiPoly       [{"beta": d, "x": [e1..en], "c": k}, ...]
 *   PipeDream       {"rank": m, "labels": [...], "rows": [["X","B"],["B"]]}
 *                   with "B" bump, "X" cross, "MB" marked bump
 *   ReductionResult {"core": <PipeDream>, "removed": [...], "word": [...]}
 *
 * Coefficients too large for a 64-bit integer are written as decimal
 * strings. Parsers throw std::invalid_argument on malformed input.
 */

#include <string>

#include "grothpd/pipe_dream.hpp"
#include "grothpd/poly.hpp"
#include "grothpd/reduction.hpp"

namespace grothpd {

std::string to_json(const BetaPoly& p);
BetaPoly beta_poly_from_json(const std::string& text);

std::string to_json(const MultiPoly& p);

std::string to_json(const PipeDream& p);
PipeDream pipe_dream_from_json(const std::string& text);

std::string to_json(const ReductionResult& r);
ReductionResult reduction_result_from_json(const std::string& text);

}  // namespace grothpd

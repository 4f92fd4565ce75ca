#pragma once

#include "strtop/checks.hpp"
#include "strtop/frobenius.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace strtop {

using Json = nlohmann::ordered_json;

/// Document layout (keys in this order):
///   format    "strtop-frobenius/1"
///   name      string
///   shift     integer
///   basis     [[label, degree], ...]
///   product   [[left, right, [[coeff, label], ...]], ...]   nonzero entries only
///   coproduct [[source, [[coeff, left, right], ...]], ...]  nonzero entries only
///   unit      [[coeff, label], ...] or null
///   counit    [[coeff, label], ...] or null
///   truncated [[left, right], ...]
///   tags      {key: value, ...}
/// Coefficients are strings "p/q" ("p" when q = 1).
Json to_json(const FrobeniusData& A);
FrobeniusData frobenius_from_json(const Json& doc);

std::string dump_algebra(const FrobeniusData& A);
FrobeniusData parse_algebra(const std::string& text);

Json to_json(const Report& r);
Json to_json(const std::vector<Report>& reports);
Json to_json(const GradedElement& x);
Json to_json(const TensorElement& x);
Json to_json(const MultiTensor& x);
Json to_json(const LinearMap& f);

/// Cocycle weight document: {"default": "1", "weights": [[left, right, coeff], ...]}
PairWeights weights_from_json(const Json& doc, const GradedBasis& basis);
Json to_json(const PairWeights& w, const GradedBasis& basis);

/// Pretty-printed, newline-terminated JSON text.
std::string dump(const Json& doc);

}  // namespace strtop

#pragma once

#include <string>

#include <json.hpp>

#include "xoph/bispectral.hpp"

namespace xoph {

/// Wire format for recurrences:
///
///   {"partition": [1, 1],
///    "f": {"coeffs": [["0","1"], ["3","1"], ["0","1"], ["2","1"]]},
///    "terms": [{"offset": 3, "num": [...], "den": [...]}, ...]}
///
/// Rationals are [numerator, denominator] pairs of decimal strings;
/// coefficient lists run from degree 0 upwards; terms are listed by
/// descending offset.
nlohmann::json to_json(const Recurrence& rec);
/// Throws std::invalid_argument on any schema violation.
Recurrence recurrence_from_json(const nlohmann::json& j);

std::string serialize(const Recurrence& rec);
Recurrence parse_recurrence(const std::string& text);

nlohmann::json to_json(const Rat& r);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFun& r);
nlohmann::json to_json(const PolyDiffOp& q);
nlohmann::json to_json(const RatDiffOp& q);
nlohmann::json to_json(const ShiftOp& q);

}  // namespace xoph

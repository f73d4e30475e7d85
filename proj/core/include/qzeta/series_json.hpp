// JSON form of a series:
//   {"offset": "p/q", "order": N, "coeffs": ["c0", "c1", ...]}
// with an extra "scale" field only when the exponent grid is finer than
// integers.  Coefficients and the offset are exact rational literals.
#pragma once

#include <nlohmann/json.hpp>

#include "qzeta/qseries.hpp"

namespace qzeta {

nlohmann::ordered_json series_to_json(const QSeries& s);
QSeries series_from_json(const nlohmann::json& j);

}  // namespace qzeta

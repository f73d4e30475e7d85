#include "qzeta/series_json.hpp"

#include <stdexcept>

namespace qzeta {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json series_to_json(const QSeries& s) {
  ordered_json j;
  j["offset"] = rat_str(s.offset());
  j["order"] = s.order();
  if (s.scale() != 1) j["scale"] = s.scale();
  ordered_json cs = ordered_json::array();
  for (const Rat& c : s.coeffs()) cs.push_back(rat_str(c));
  j["coeffs"] = std::move(cs);
  return j;
}

namespace {

Rat rat_from_json(const json& v) {
  if (v.is_string()) return rat_parse(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long>());
  throw std::invalid_argument("expected a rational literal");
}

}  // namespace

QSeries series_from_json(const json& j) {
  if (!j.is_object() || !j.contains("offset") || !j.contains("order") || !j.contains("coeffs"))
    throw std::invalid_argument("series object needs offset, order and coeffs");
  Rat offset = rat_from_json(j.at("offset"));
  long order = j.at("order").get<long>();
  long scale = j.contains("scale") ? j.at("scale").get<long>() : 1;
  const json& cs = j.at("coeffs");
  if (!cs.is_array()) throw std::invalid_argument("series coeffs must be an array");
  if (cs.empty()) {
    if (offset != 0 || scale != 1)
      throw std::invalid_argument("empty series must use offset 0 on the integer grid");
    return QSeries::zero(order);
  }
  if ((long)cs.size() != order + 1)
    throw std::invalid_argument("series order disagrees with the coefficient count");
  std::vector<Rat> coeffs;
  coeffs.reserve(cs.size());
  for (const json& v : cs) coeffs.push_back(rat_from_json(v));
  return QSeries::from_parts(offset, scale, std::move(coeffs));
}

}  // namespace qzeta

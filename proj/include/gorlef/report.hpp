#ifndef GORLEF_REPORT_HPP
#define GORLEF_REPORT_HPP

#include "gorlef/matrix.hpp"

#include <json.hpp>

#include <string>

namespace gorlef {

// Version of every JSON document emitted by the toolkit.
inline constexpr int kSchemaVersion = 1;

// Scalars are serialized as strings ("3", "-1/2") so values stay exact.
inline nlohmann::json to_json(const Scalar& s) { return s.get_str(); }

inline nlohmann::json to_json(const Vector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

inline nlohmann::json to_json(const Matrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

}  // namespace gorlef

#endif  // GORLEF_REPORT_HPP

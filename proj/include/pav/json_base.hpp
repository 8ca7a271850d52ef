#pragma once

#include <json.hpp>

#include "pav/matrix.hpp"

namespace pav {

// Canonical scalar encoding: plain JSON number when it fits the double-safe
// integer range, decimal string otherwise.
inline nlohmann::json json_int(const Int& x) {
  static const Int lim = Int(1) << 53;
  if (x > -lim && x < lim) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

// Integer-valued rationals as numbers, everything else as reduced "p/q".
inline nlohmann::json json_rat(const Rat& x) {
  if (is_integral(x)) return json_int(x.get_num());
  return rat_str(x);
}

inline nlohmann::json json_imat(const IMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json json_qmat(const QMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json_rat(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json json_ivec(const IVec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& x : v) arr.push_back(json_int(x));
  return arr;
}

inline nlohmann::json json_qvec(const QVec& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Rat& x : v) arr.push_back(rat_str(x));
  return arr;
}

}  // namespace pav

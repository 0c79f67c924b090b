#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "k3lat/int_matrix.hpp"

namespace k3lat::detail {

using json = nlohmann::ordered_json;

inline json integer_to_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return json(x.get_si());
  return json(x.get_str());
}

inline Integer integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) {
      throw std::invalid_argument(std::string(what) + ": bad integer string");
    }
    return x;
  }
  throw std::invalid_argument(std::string(what) + ": expected an integer");
}

inline json vector_to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

inline IntVector vector_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x, what));
  return v;
}

inline json matrix_to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_to_json(m.row(i)));
  return a;
}

// Nested rows; `cols` is needed for matrices with zero rows.
inline IntMatrix matrix_from_json(const json& j, std::size_t cols, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
  std::vector<IntVector> rows;
  for (const auto& r : j) {
    rows.push_back(vector_from_json(r, what));
    if (rows.back().size() != cols) {
      throw std::invalid_argument(std::string(what) + ": row length mismatch");
    }
  }
  return IntMatrix::from_rows(rows, cols);
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace k3lat::detail

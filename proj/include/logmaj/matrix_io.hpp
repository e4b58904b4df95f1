#pragma once

// JSON form of matrices: {"n": n, "entries": [[[re, im], ...], ...]} row-major.
// Readers also take a bare real for [re, 0]. Non-finite reals are written as
// the strings "inf", "-inf" and "nan".

#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <nlohmann/json.hpp>

#include "logmaj/randgen.hpp"
#include "logmaj/rng.hpp"

namespace logmaj {

using Json = nlohmann::ordered_json;

inline Json real_to_json(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

inline double real_from_json(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw Error(ErrorCode::BadFormat, "expected a real, got " + j.dump());
}

inline Json reals_to_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(real_to_json(x));
  return a;
}

inline std::vector<double> reals_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::BadFormat, "expected an array of reals");
  std::vector<double> v;
  for (const auto& x : j) v.push_back(real_from_json(x));
  return v;
}

inline Json matrix_to_json(const MatrixD& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back({real_to_json(m(i, k).real()), real_to_json(m(i, k).imag())});
    rows.push_back(std::move(row));
  }
  return {{"n", m.rows()}, {"entries", std::move(rows)}};
}

inline MatrixD matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
    throw Error(ErrorCode::BadFormat, "matrix needs \"n\" and \"entries\"");
  const auto n = j.at("n").get<Index>();
  const Json& rows = j.at("entries");
  if (n < 1 || !rows.is_array() || static_cast<Index>(rows.size()) != n)
    throw Error(ErrorCode::BadFormat, "matrix row count does not match n");
  MatrixD m(n, n);
  for (Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw Error(ErrorCode::BadFormat, "matrix row length does not match n");
    for (Index k = 0; k < n; ++k) {
      const Json& x = row[static_cast<std::size_t>(k)];
      if (x.is_array()) {
        if (x.size() != 2) throw Error(ErrorCode::BadFormat, "complex entry must be [re, im]");
        m(i, k) = {real_from_json(x[0]), real_from_json(x[1])};
      } else {
        m(i, k) = {real_from_json(x), 0.0};
      }
    }
  }
  return m;
}

/// FNV-1a over the row-major (re, im) bit patterns, as 16 hex digits.
inline std::string matrix_digest(const MatrixD& m) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  for (Index i = 0; i < m.rows(); ++i)
    for (Index k = 0; k < m.cols(); ++k) {
      mix(m(i, k).real());
      mix(m(i, k).imag());
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace logmaj

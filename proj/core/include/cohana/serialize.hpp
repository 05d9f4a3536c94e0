#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cohana/functions.hpp"
#include "cohana/grids.hpp"

namespace cohana::io {

// Minimal deterministic JSON value: ordered keys, floats printed %.17g.
class Json {
public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;

  Json() : value_(nullptr) {}
  Json(std::nullptr_t) : value_(nullptr) {}
  Json(bool b) : value_(b) {}
  Json(int v) : value_(static_cast<std::int64_t>(v)) {}
  Json(std::int64_t v) : value_(v) {}
  Json(std::uint64_t v) : value_(static_cast<std::int64_t>(v)) {}
  Json(double v) : value_(v) {}
  Json(const char* s) : value_(std::string(s)) {}
  Json(std::string s) : value_(std::move(s)) {}
  Json(Array a) : value_(std::move(a)) {}
  Json(Object o) : value_(std::move(o)) {}

  static Json object() { return Json(Object{}); }
  static Json array() { return Json(Array{}); }

  Json& set(const std::string& key, Json v);
  Json& push(Json v);

  std::string dump(int indent = 0) const;

private:
  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> value_;
  void dump_to(std::string& out, int indent, int depth) const;
};

std::string format_double(double v); // %.17g

// FNV-1a 64-bit over a byte string, hex-encoded.
std::uint64_t fnv1a(const std::string& bytes);
std::string checksum_hex(const std::string& bytes);

// CSV layout: node_re,node_im,weight,value_re,value_im (one row per node).
std::string grid_csv(const grids::Grid& grid, const std::vector<std::complex<double>>* values);
std::string grid_law_name(const grids::Grid& grid);
std::string grid_checksum(const grids::Grid& grid);

// JSON envelope: domain, law, N, checksum (of the CSV bytes).
Json grid_envelope(const grids::Grid& grid, const std::string& csv_checksum);

Json matrix_json(const Eigen::MatrixXcd& m);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

} // namespace cohana::io

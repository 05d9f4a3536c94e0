#include "cohana/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cohana/errors.hpp"

namespace cohana::io {

Json& Json::set(const std::string& key, Json v) {
  auto* obj = std::get_if<Object>(&value_);
  if (!obj) throw error(errc::invalid_input, "Json::set on a non-object");
  obj->emplace_back(key, std::move(v));
  return *this;
}

Json& Json::push(Json v) {
  auto* arr = std::get_if<Array>(&value_);
  if (!arr) throw error(errc::invalid_input, "Json::push on a non-array");
  arr->push_back(std::move(v));
  return *this;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {
void escape_to(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
}
} // namespace

void Json::dump_to(std::string& out, int indent, int depth) const {
  auto pad = [&](int d) {
    if (indent > 0) {
      out += '\n';
      out.append(static_cast<std::size_t>(indent) * d, ' ');
    }
  };
  if (std::holds_alternative<std::nullptr_t>(value_)) {
    out += "null";
  } else if (const auto* b = std::get_if<bool>(&value_)) {
    out += *b ? "true" : "false";
  } else if (const auto* i = std::get_if<std::int64_t>(&value_)) {
    out += std::to_string(*i);
  } else if (const auto* d = std::get_if<double>(&value_)) {
    out += format_double(*d);
  } else if (const auto* s = std::get_if<std::string>(&value_)) {
    escape_to(out, *s);
  } else if (const auto* arr = std::get_if<Array>(&value_)) {
    out += '[';
    for (std::size_t k = 0; k < arr->size(); ++k) {
      if (k) out += ',';
      pad(depth + 1);
      (*arr)[k].dump_to(out, indent, depth + 1);
    }
    if (!arr->empty()) pad(depth);
    out += ']';
  } else if (const auto* obj = std::get_if<Object>(&value_)) {
    out += '{';
    for (std::size_t k = 0; k < obj->size(); ++k) {
      if (k) out += ',';
      pad(depth + 1);
      escape_to(out, (*obj)[k].first);
      out += indent > 0 ? ": " : ":";
      (*obj)[k].second.dump_to(out, indent, depth + 1);
    }
    if (!obj->empty()) pad(depth);
    out += '}';
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  dump_to(out, indent, 0);
  return out;
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string checksum_hex(const std::string& bytes) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string grid_csv(const grids::Grid& grid, const std::vector<std::complex<double>>* values) {
  if (values && values->size() != grid.size())
    throw error(errc::grid_mismatch, "grid_csv: value count does not match grid");
  std::string out = "node_re,node_im,weight,value_re,value_im\n";
  for (std::size_t k = 0; k < grid.size(); ++k) {
    out += format_double(grid.nodes[k].real());
    out += ',';
    out += format_double(grid.nodes[k].imag());
    out += ',';
    out += format_double(grid.weights[k]);
    out += ',';
    out += format_double(values ? (*values)[k].real() : 0.0);
    out += ',';
    out += format_double(values ? (*values)[k].imag() : 0.0);
    out += '\n';
  }
  return out;
}

std::string grid_law_name(const grids::Grid& grid) {
  switch (grid.law) {
    case grids::Law::circle_uniform: return "normalized-lebesgue-dphi";
    case grids::Law::disk_invariant: return "invariant-dmu";
    case grids::Law::disk_weighted: return "weighted-dmu-" + std::to_string(grid.m);
    case grids::Law::plane_gaussian: return "gaussian-exp(-|z|^2)dz";
    case grids::Law::line_absorbed: return "lebesgue-dx-gauss-absorbed";
  }
  return "?";
}

namespace {
std::string domain_name(const grids::Grid& grid) {
  switch (grid.domain) {
    case grids::Domain::circle: return "circle";
    case grids::Domain::disk: return "disk";
    case grids::Domain::plane: return "plane";
    case grids::Domain::line: return "real-line";
  }
  return "?";
}
} // namespace

std::string grid_checksum(const grids::Grid& grid) {
  return checksum_hex(grid_csv(grid, nullptr));
}

Json grid_envelope(const grids::Grid& grid, const std::string& csv_checksum) {
  Json env = Json::object();
  env.set("domain", domain_name(grid));
  env.set("law", grid_law_name(grid));
  env.set("N", static_cast<std::int64_t>(grid.size()));
  if (grid.domain == grids::Domain::disk) {
    env.set("nr", grid.n1);
    env.set("ntheta", grid.n2);
    env.set("r_max", grid.r_max);
    env.set("boundary_warning", grid.boundary_warning);
  }
  env.set("checksum", csv_checksum);
  return env;
}

Json matrix_json(const Eigen::MatrixXcd& m) {
  Json rows = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) {
      Json entry = Json::array();
      entry.push(m(i, j).real());
      entry.push(m(i, j).imag());
      row.push(std::move(entry));
    }
    rows.push(std::move(row));
  }
  Json out = Json::object();
  out.set("dim", static_cast<std::int64_t>(m.rows()));
  out.set("entries", std::move(rows));
  return out;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw error(errc::invalid_input, "write_file: cannot open " + path);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw error(errc::invalid_input, "read_file: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

} // namespace cohana::io

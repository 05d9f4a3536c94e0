#include <doctest.h>

#include <sstream>

#include "cohana/grids.hpp"
#include "cohana/serialize.hpp"

using namespace cohana;
using cplx = std::complex<double>;

TEST_CASE("csv layout and checksum stability") {
  auto g = grids::circle_grid(8);
  std::vector<cplx> values(g->size());
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = cplx(double(k), -double(k));
  std::string csv = io::grid_csv(*g, &values);

  std::istringstream is(csv);
  std::string header;
  std::getline(is, header);
  CHECK(header == "node_re,node_im,weight,value_re,value_im");
  int rows = 0;
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 8);

  // identical input, identical bytes and checksum
  CHECK(io::grid_csv(*g, &values) == csv);
  CHECK(io::checksum_hex(csv) == io::checksum_hex(csv));
  CHECK(io::checksum_hex(csv).size() == 16);
}

TEST_CASE("json envelope fields") {
  auto g = grids::disk_grid(8, 16, grids::DiskLaw::weighted, 0.9, 3);
  std::string csv = io::grid_csv(*g, nullptr);
  std::string env = io::grid_envelope(*g, io::checksum_hex(csv)).dump();
  CHECK(env.find("\"domain\":\"disk\"") != std::string::npos);
  CHECK(env.find("weighted-dmu-3") != std::string::npos);
  CHECK(env.find("\"N\":128") != std::string::npos);
  CHECK(env.find("\"checksum\":") != std::string::npos);
}

TEST_CASE("deterministic json writer") {
  io::Json obj = io::Json::object();
  obj.set("a", 1.5);
  obj.set("b", "text");
  io::Json arr = io::Json::array();
  arr.push(io::Json(std::int64_t(3)));
  arr.push(io::Json(0.25));
  obj.set("c", std::move(arr));
  CHECK(obj.dump() == "{\"a\":1.5,\"b\":\"text\",\"c\":[3,0.25]}");
  // 17 significant digits round-trip
  CHECK(io::format_double(1.0 / 3.0) == "0.33333333333333331");
}

TEST_CASE("matrix json shape") {
  Eigen::MatrixXcd m(2, 2);
  m << cplx(1.0, 2.0), cplx(0.0, 0.0), cplx(-0.5, 0.0), cplx(0.0, -1.0);
  std::string s = io::matrix_json(m).dump();
  CHECK(s == "{\"dim\":2,\"entries\":[[[1,2],[0,0]],[[-0.5,0],[0,-1]]]}");
}

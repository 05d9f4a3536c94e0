// Command-line front end: reduced transforms, verification suites, and the
// functional calculi, all with machine-readable reports.
//
// Exit codes: 0 success; 1 failed verification; 2 bad input or expression;
// 3 operator-norm violation; 4 pole inside the unit disk.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cohana/cstrans.hpp"
#include "cohana/errors.hpp"
#include "cohana/ncpoly.hpp"
#include "cohana/opcalc.hpp"
#include "cohana/serialize.hpp"
#include "cohana/verify.hpp"
#include "cohana/version.hpp"

using namespace cohana;
using cplx = std::complex<double>;

namespace {

std::string output_path(const std::string& out, const std::string& fallback) {
  std::string path = out.empty() ? fallback : out;
  if (!path.empty() && path.front() != '/') {
    if (const char* dir = std::getenv("COHANA_OUTDIR")) {
      std::string base = dir;
      if (!base.empty() && base.back() != '/') base += '/';
      return base + path;
    }
  }
  return path;
}

std::vector<cplx> parse_coeff_list(const std::string& text) {
  std::vector<cplx> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      double v = std::stod(item, &used);
      out.push_back(cplx(v, 0.0));
    } catch (...) {
      throw parse_error(0, "bad coefficient '" + item + "'");
    }
  }
  return out;
}

io::Json residual_entry(const std::string& name, double value, double tolerance) {
  io::Json e = io::Json::object();
  e.set("name", name);
  e.set("value", value);
  e.set("tolerance", tolerance);
  e.set("pass", value <= tolerance);
  return e;
}

io::Json record_header(const std::string& command) {
  io::Json rec = io::Json::object();
  rec.set("tool", "cohana");
  rec.set("version", version_string);
  rec.set("command", command);
  return rec;
}

void emit_record(const io::Json& rec, const std::string& out_path) {
  std::string text = rec.dump(2) + "\n";
  if (!out_path.empty())
    io::write_file(out_path, text);
  else
    std::cout << text;
}

// ------------------------------------------------------------- transform --

int run_transform(const std::string& theory, const std::string& fourier,
                  const std::string& monomial, const std::string& hermite, int nodes, double rmax,
                  int m, double tolerance, const std::string& out, const std::string& format) {
  std::vector<cplx> coeffs;
  cstrans::Theory th = [&] {
    if (theory == "hardy") {
      if (fourier.empty() && (!monomial.empty() || !hermite.empty()))
        throw parse_error(0, "hardy takes --fourier coefficients");
      coeffs = parse_coeff_list(fourier);
      return cstrans::make_hardy(nodes > 0 ? nodes : 256);
    }
    if (theory == "bergman") {
      if (monomial.empty() && (!fourier.empty() || !hermite.empty()))
        throw parse_error(0, "bergman takes --monomial coefficients");
      coeffs = parse_coeff_list(monomial);
      return cstrans::make_bergman(m, 64, nodes > 0 ? nodes : 256, rmax);
    }
    if (theory == "sb") {
      if (hermite.empty() && (!fourier.empty() || !monomial.empty()))
        throw parse_error(0, "sb takes --hermite coefficients");
      coeffs = parse_coeff_list(hermite);
      return cstrans::make_segal_bargmann(nodes > 0 ? nodes : 128, 64);
    }
    throw parse_error(0, "unknown theory '" + theory + "'");
  }();

  grids::SampledFunction f;
  if (th.kind == cstrans::TheoryKind::segal_bargmann) {
    fn::GaussHermiteFn sum; // zero polynomial by default
    sum.p = fn::Polynomial::constant(0.0);
    for (std::size_t n = 0; n < coeffs.size(); ++n)
      sum.p = sum.p + coeffs[n] * fn::hermite_function(static_cast<int>(n)).p;
    f = grids::make_sampled(th.x_grid, fn::ClosedForm(sum));
  } else {
    fn::Polynomial p(coeffs.empty() ? std::vector<cplx>{cplx(0.0, 0.0)} : coeffs);
    f = grids::make_sampled(th.x_grid, fn::ClosedForm(fn::RationalFn::from_poly(p)));
  }

  // calibrated transform values on the Omega grid (for the plane theory the
  // embedding is already isometric and this is the transform itself)
  fn::GenericFn calibrated = cstrans::analytic_extension(th, f);
  grids::SampledFunction result;
  if (th.kind == cstrans::TheoryKind::segal_bargmann) {
    result = cstrans::reduced_transform(th, f);
  } else {
    result = grids::make_sampled(th.omega_grid, fn::ClosedForm(calibrated));
  }

  cstrans::CrResidual cr = cstrans::cr_residual(
      th, th.kind == cstrans::TheoryKind::segal_bargmann
              ? result
              : grids::make_sampled(th.omega_grid, fn::ClosedForm(fn::GenericFn(calibrated))));

  std::string base = output_path(out, "cohana_transform_" + theory);
  std::string csv = io::grid_csv(*th.omega_grid, &result.values);
  std::string csv_path = base + ".csv";
  std::string env_path = base + ".json";
  io::write_file(csv_path, csv);
  io::Json env = io::grid_envelope(*th.omega_grid, io::checksum_hex(csv));
  env.set("theory", th.name());
  // calibration constants of the theory (per-mode Gram normalizers; the
  // scalar here is the n = 0 anchor, i.e. the grid mass)
  if (!th.hx.empty()) {
    io::Json cal = io::Json::object();
    cal.set("type", "per-mode-gram");
    cal.set("mass", th.hx[0]);
    cal.set("modes", static_cast<std::int64_t>(th.n_modes));
    env.set("calibration", std::move(cal));
  } else {
    env.set("calibration", "isometric");
  }
  io::write_file(env_path, env.dump(2) + "\n");

  io::Json rec = record_header("transform");
  io::Json params = io::Json::object();
  params.set("theory", th.name());
  params.set("coefficients", static_cast<std::int64_t>(coeffs.size()));
  params.set("nodes", static_cast<std::int64_t>(th.x_grid->size()));
  params.set("format", format);
  rec.set("parameters", std::move(params));
  io::Json checks = io::Json::array();
  checks.push(io::grid_checksum(*th.x_grid));
  checks.push(io::grid_checksum(*th.omega_grid));
  rec.set("grid_checksums", std::move(checks));
  io::Json outputs = io::Json::array();
  outputs.push(csv_path);
  outputs.push(env_path);
  rec.set("outputs", std::move(outputs));
  io::Json residuals = io::Json::array();
  residuals.push(residual_entry("cauchy-riemann-annihilator", cr.residual, tolerance));
  rec.set("residuals", std::move(residuals));
  if (format == "csv")
    std::cout << csv; // files are written either way; --format picks stdout
  else
    emit_record(rec, "");
  return 0;
}

// ---------------------------------------------------------------- verify --

int run_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
  std::vector<verify::Report> reports;
  if (suite == "all") {
    reports = verify::verify_all(seed);
  } else if (suite == "groups") {
    reports.push_back(verify::verify_groups(seed));
  } else if (suite == "reps") {
    reports.push_back(verify::verify_reps(seed));
  } else if (suite == "cstrans") {
    reports.push_back(verify::verify_cstrans(seed));
  } else if (suite == "qplane") {
    reports.push_back(verify::verify_qplane(seed));
  } else if (suite == "opcalc") {
    reports.push_back(verify::verify_opcalc(seed));
  } else {
    throw parse_error(0, "unknown suite '" + suite + "'");
  }

  bool all_pass = true;
  io::Json rec = record_header("verify");
  io::Json params = io::Json::object();
  params.set("suite", suite);
  params.set("seed", static_cast<std::int64_t>(seed));
  rec.set("parameters", std::move(params));
  io::Json suites = io::Json::array();
  for (const auto& report : reports) {
    io::Json sj = io::Json::object();
    sj.set("suite", report.suite);
    io::Json checks = io::Json::array();
    for (const auto& c : report.checks) {
      io::Json cj = io::Json::object();
      cj.set("name", c.name);
      cj.set("residual", c.residual);
      cj.set("tolerance", c.tolerance);
      cj.set("pass", c.pass);
      if (!c.pass) cj.set("counterexample", c.counterexample);
      checks.push(std::move(cj));
      all_pass = all_pass && c.pass;
    }
    sj.set("checks", std::move(checks));
    sj.set("pass", report.all_pass());
    suites.push(std::move(sj));
  }
  rec.set("suites", std::move(suites));
  rec.set("pass", all_pass);
  emit_record(rec, output_path(out, ""));
  return all_pass ? 0 : 1;
}

// --------------------------------------------------------------- funcalc --

Eigen::MatrixXcd read_matrix(const std::string& path) {
  nlohmann::json j = nlohmann::json::parse(io::read_file(path));
  int dim = j.at("dim").get<int>();
  Eigen::MatrixXcd m(dim, dim);
  const auto& rows = j.at("entries");
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) {
      const auto& e = rows.at(r).at(c);
      m(r, c) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
    }
  return m;
}

int run_funcalc(const std::string& fexpr, const std::string& matrix_path,
                const std::string& method, int nodes, double rho, const std::string& out) {
  fn::RationalFn f = qplane::parse_rational_z(fexpr);
  opcalc::BoundaryFunction bf = opcalc::boundary_from_rational(f);
  opcalc::CMatrix t = opcalc::make_cmatrix(read_matrix(matrix_path));

  io::Json rec = record_header("funcalc");
  io::Json params = io::Json::object();
  params.set("f", fexpr);
  params.set("matrix", matrix_path);
  params.set("method", method);
  params.set("norm_bound", t.norm_bound);
  params.set("norm_bound_residual", t.bound_residual);
  rec.set("parameters", std::move(params));

  Eigen::MatrixXcd value;
  io::Json residuals = io::Json::array();
  if (method == "contour") {
    value = opcalc::riesz_dunford_contour(bf, t, nodes > 0 ? nodes : 512);
    Eigen::MatrixXcd oracle = opcalc::spectral_oracle(bf, t);
    residuals.push(residual_entry("spectral-oracle-delta", (value - oracle).norm(), 1e-8));
  } else if (method == "disk") {
    auto grid = grids::disk_grid(64, 64, grids::DiskLaw::weighted, 1.0, 2);
    auto res = opcalc::riesz_dunford_disk(bf, t, rho, *grid);
    value = res.regularized;
    rec.set("divergence_flag", res.divergence_flag);
    rec.set("drift", res.drift);
    Eigen::MatrixXcd oracle = opcalc::spectral_oracle(bf, t);
    residuals.push(residual_entry("regularized-vs-contour-oracle",
                                  (res.regularized - oracle).norm(), 1e-4));
  } else if (method == "weyl") {
    if (bf.f.den.degree() != 0)
      throw parse_error(0, "weyl method takes a polynomial symbol");
    if ((t.mat - t.mat.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
      throw error(errc::invalid_input, "weyl method needs a Hermitian matrix");
    // single variable: the symmetrized image is the plain polynomial calculus
    std::vector<cplx> coeffs = bf.f.num.c;
    for (auto& c : coeffs) c /= bf.f.den.c[0];
    value = Eigen::MatrixXcd::Zero(t.dim(), t.dim());
    Eigen::MatrixXcd tk = Eigen::MatrixXcd::Identity(t.dim(), t.dim());
    for (const cplx& c : coeffs) {
      value += c * tk;
      tk = tk * t.mat;
    }
    residuals.push(residual_entry("one-variable-symmetrization", 0.0, 1e-15));
  } else {
    throw parse_error(0, "unknown method '" + method + "'");
  }

  rec.set("result", io::matrix_json(value));
  rec.set("residuals", std::move(residuals));
  emit_record(rec, output_path(out, ""));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"group-representation transforms and covariant functional calculi"};
  app.require_subcommand(1);

  std::string theory, fourier, monomial, hermite, out, format = "json";
  int nodes = 0, m = 2;
  double rmax = 1.0, tolerance = 1e-6, rho = 0.9;
  std::uint64_t seed = 12345;
  std::string suite = "all", fexpr = "1", matrix_path, method = "contour";

  CLI::App* t = app.add_subcommand("transform", "reduced coherent-state transform");
  t->add_option("theory", theory, "hardy | bergman | sb")->required();
  t->add_option("--fourier", fourier, "comma-separated Fourier coefficients (hardy)");
  t->add_option("--monomial", monomial, "comma-separated monomial coefficients (bergman)");
  t->add_option("--hermite", hermite, "comma-separated Hermite coefficients (sb)");
  t->add_option("--nodes", nodes, "grid resolution");
  t->add_option("--rmax", rmax, "disk truncation radius");
  t->add_option("--m", m, "Bergman weight (m >= 2)");
  t->add_option("--tolerance", tolerance, "self-check tolerance");
  t->add_option("--seed", seed, "random seed (unused here, kept for uniform CLI)");
  t->add_option("--format", format, "json | csv");
  t->add_option("--out", out, "output path base");

  CLI::App* v = app.add_subcommand("verify", "run a module property suite");
  v->add_option("suite", suite, "groups | reps | cstrans | qplane | opcalc | all")->required();
  v->add_option("--seed", seed, "random seed");
  v->add_option("--nodes", nodes, "grid resolution (suite defaults if 0)");
  v->add_option("--tolerance", tolerance, "unused override, reported only");
  v->add_option("--format", format, "json");
  v->add_option("--out", out, "write the report here instead of stdout");

  CLI::App* fc = app.add_subcommand("funcalc", "functional calculus of a matrix");
  fc->add_option("--f", fexpr, "expression over z, e.g. \"1/(1-z/2)\"")->required();
  fc->add_option("--matrix", matrix_path, "matrix JSON path")->required();
  fc->add_option("--method", method, "contour | disk | weyl");
  fc->add_option("--nodes", nodes, "contour nodes");
  fc->add_option("--rho", rho, "disk cutoff radius");
  fc->add_option("--out", out, "write the record here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (t->parsed())
      code = run_transform(theory, fourier, monomial, hermite, nodes, rmax, m, tolerance, out,
                           format);
    else if (v->parsed())
      code = run_verify(suite, seed, out);
    else if (fc->parsed())
      code = run_funcalc(fexpr, matrix_path, method, nodes, rho, out);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case errc::norm_violation: return 3;
      case errc::pole: return 4;
      default: return 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  // wall time goes to stderr so reports stay bitwise reproducible
  std::cerr << "wall_time_ms " << elapsed.count() << "\n";
  return code;
}

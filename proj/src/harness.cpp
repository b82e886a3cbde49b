#include "patree/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <locale>
#include <random>
#include <set>
#include <sstream>

namespace patree {

using numeric::Mat;
using numeric::Quad;
using numeric::Vec;

std::vector<double> ExperimentConfig::grid() const {
  std::vector<double> hs;
  double h = h0;
  for (int i = 0; i < count; ++i, h *= ratio) hs.push_back(h);
  return hs;
}

void ExperimentConfig::validate() const {
  if (problem != "so3-rotation" && problem != "so3-mixed" && problem != "so3-compressible") throw DomainError("unknown problem '" + problem + "'");
  static const std::set<std::string> methods{"euler", "euler-pre3", "euler-pre3c", "lrk3", "lrk3-pre4", "lrk3-pre4c"};
  if (!methods.count(method))
    throw DomainError("unknown method '" + method + "'");
  if (!(h0 > 0) || !std::isfinite(h0)) throw DomainError("h0 must be positive");
  if (!(ratio > 0 && ratio < 1)) throw DomainError("ratio must lie in (0, 1) for a decreasing grid");
  if (count < 1) throw DomainError("count must be positive");
  if (!(T > 0) || !std::isfinite(T)) throw DomainError("T must be positive");
  if (!(eps >= 1e-7 && eps <= 1e-4)) throw DomainError("eps must lie in [1e-7, 1e-4]");
}

ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  std::istringstream in{std::string(text)};
  in.imbue(std::locale::classic());
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    auto issp = [](unsigned char c) { return std::isspace(c); };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), issp));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), issp).base(), s.end());
    return s;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", lineno, 1);
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    auto number = [&]() {
      std::istringstream v(value);
      v.imbue(std::locale::classic());
      double x;
      if (!(v >> x) || !v.eof()) throw ParseError("bad number for " + key, lineno, static_cast<int>(eq) + 2);
      return x;
    };
    if (key == "problem")
      cfg.problem = value;
    else if (key == "method")
      cfg.method = value;
    else if (key == "h0")
      cfg.h0 = number();
    else if (key == "ratio")
      cfg.ratio = number();
    else if (key == "count")
      cfg.count = static_cast<int>(number());
    else if (key == "T")
      cfg.T = number();
    else if (key == "seed")
      cfg.seed = static_cast<unsigned long long>(number());
    else if (key == "eps")
      cfg.eps = number();
    else if (key == "out")
      cfg.out = value;
    else
      throw ParseError("unknown key '" + key + "'", lineno, 1);
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

double estimate_slope(std::span<const std::pair<double, double>> pairs, double floor) {
  if (pairs.size() < 4) throw DomainError("slope estimation needs at least 4 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& [h, v] : pairs) {
    if (!(h > 0)) throw DomainError("step sizes must be positive");
    if (!(v > floor) || !std::isfinite(v)) continue;
    double x = std::log(h), y = std::log(v);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) throw NumericError("indeterminate slope: fewer than two points above the floor");
  double den = n * sxx - sx * sx;
  if (den == 0) throw NumericError("indeterminate slope: all step sizes equal");
  return (n * sxy - sx * sy) / den;
}

double jacobian_determinant_defect(const StepMap<Quad>& step, const Mat<Quad>& y, const numeric::FrameBasis& basis,
                                   double eps) {
  const int m = basis.size();
  const Mat<Quad> base = step(y);
  const Quad e = eps;
  auto probe = [&](int j, Quad t) {
    Vec<Quad> v = Vec<Quad>::Zero(m);
    v(j) = t;
    return numeric::group_log<Quad>(step(numeric::group_exp<Quad>(v, basis, y)), base, basis);
  };
  Mat<Quad> jac(m, m);
  for (int j = 0; j < m; ++j)
    jac.col(j) = (Quad(8) * (probe(j, e) - probe(j, -e)) - (probe(j, 2 * e) - probe(j, -2 * e))) / (12 * e);
  return static_cast<double>(abs(jac.determinant() - 1));
}

Mat<double> integrate(const std::string& method, const numeric::FramedField<double>& field, const Mat<double>& y0,
                      double h, double T) {
  const long long n = std::max(1LL, std::llround(T / h));
  auto step = make_step<double>(method, field, T / static_cast<double>(n));
  Mat<double> y = y0;
  for (long long i = 0; i < n; ++i) {
    y = step(y);
    if ((i & 1023) == 1023) y = numeric::reorthonormalize(y);
  }
  return numeric::reorthonormalize(y);
}

namespace {

struct Setup {
  numeric::LinearFramedField<double> field;
  numeric::LinearFramedField<Quad> field_q;
  Mat<double> y0;
  Mat<double> reference;
  Mat<double> reference_half;
  double reference_ms = 0;
};

Setup prepare(const ExperimentConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  Setup s{make_problem<double>(cfg.problem), make_problem<Quad>(cfg.problem), numeric::random_rotation(rng), {}, {}, 0};
  auto hs = cfg.grid();
  const double href = *std::min_element(hs.begin(), hs.end()) / 100;
  auto t0 = std::chrono::steady_clock::now();
  s.reference = integrate("lrk3", s.field, s.y0, href, cfg.T);
  s.reference_half = integrate("lrk3", s.field, s.y0, href / 2, cfg.T);
  s.reference_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

RunRecord run_one(const ExperimentConfig& cfg, const Setup& s, double h) {
  RunRecord r;
  r.h = h;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Mat<double> y = integrate(cfg.method, s.field, s.y0, h, cfg.T);
    r.global_error = numeric::group_log<double>(y, s.reference, s.field.basis()).norm();
    auto step = make_step<Quad>(cfg.method, s.field_q, Quad(h));
    r.det_defect = jacobian_determinant_defect(step, numeric::reorthonormalize<Quad>(s.y0.cast<Quad>()), s.field.basis(), cfg.eps);
    if (!std::isfinite(r.global_error) || !std::isfinite(r.det_defect)) throw NumericError("non-finite result");
  } catch (const std::exception& e) {
    r.ok = false;
    r.message = e.what();
    r.global_error = r.det_defect = std::numeric_limits<double>::quiet_NaN();
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ExperimentResult finish(const ExperimentConfig& cfg, const Setup& s, std::vector<RunRecord> records) {
  ExperimentResult out;
  out.config = cfg;
  std::sort(records.begin(), records.end(), [](const RunRecord& a, const RunRecord& b) { return a.h > b.h; });
  out.records = std::move(records);
  out.reference_ms = s.reference_ms;
  std::vector<std::pair<double, double>> err, vol;
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& r : out.records)
    if (r.ok) {
      err.emplace_back(r.h, r.global_error);
      vol.emplace_back(r.h, r.det_defect);
      smallest = std::min(smallest, r.global_error);
    }
  auto slope = [](const auto& pairs) -> std::optional<double> {
    try {
      return estimate_slope(pairs);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  out.convergence_slope = slope(err);
  out.volume_slope = slope(vol);
  out.reference_check = numeric::group_log<double>(s.reference_half, s.reference, s.field.basis()).norm() / smallest;
  return out;
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  Setup s = prepare(cfg);
  auto hs = cfg.grid();
  std::vector<RunRecord> records(hs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < hs.size(); ++i) records[i] = run_one(cfg, s, hs[i]);
  return finish(cfg, s, std::move(records));
}

ExperimentResult run_experiment_serial(const ExperimentConfig& cfg) {
  Setup s = prepare(cfg);
  std::vector<RunRecord> records;
  for (double h : cfg.grid()) records.push_back(run_one(cfg, s, h));
  return finish(cfg, s, std::move(records));
}

void write_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  std::ostringstream ss;
  ss.imbue(std::locale::classic());
  ss << std::setprecision(17) << "h,global_error,det_defect,wall_ms\n";
  for (const auto& r : records) ss << r.h << ',' << r.global_error << ',' << r.det_defect << ',' << r.wall_ms << '\n';
  os << ss.str();
}

std::vector<RunRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("h,global_error,det_defect,wall_ms", 0) != 0)
    throw ParseError("expected header h,global_error,det_defect,wall_ms", 1, 1);
  std::vector<RunRecord> out;
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    ls.imbue(std::locale::classic());
    RunRecord r;
    char c1 = 0, c2 = 0, c3 = 0;
    if (!(ls >> r.h >> c1 >> r.global_error >> c2 >> r.det_defect >> c3 >> r.wall_ms) || c1 != ',' || c2 != ',' ||
        c3 != ',')
      throw ParseError("malformed CSV row", lineno, 1);
    out.push_back(r);
  }
  return out;
}

std::string summary_json(const ExperimentResult& r) {
  nlohmann::json j;
  j["problem"] = r.config.problem;
  j["method"] = r.config.method;
  j["T"] = r.config.T;
  j["seed"] = r.config.seed;
  j["eps"] = r.config.eps;
  j["convergence_slope"] = r.convergence_slope ? nlohmann::json(*r.convergence_slope) : nlohmann::json(nullptr);
  j["volume_slope"] = r.volume_slope ? nlohmann::json(*r.volume_slope) : nlohmann::json(nullptr);
  j["reference_check"] = r.reference_check;
  j["reference_ms"] = r.reference_ms;
  for (const auto& rec : r.records) {
    nlohmann::json row = {{"h", rec.h}, {"wall_ms", rec.wall_ms}, {"ok", rec.ok}};
    if (rec.ok) {
      row["global_error"] = rec.global_error;
      row["det_defect"] = rec.det_defect;
    } else {
      row["message"] = rec.message;
    }
    j["records"].push_back(row);
  }
  return j.dump(2);
}

void save(const ExperimentResult& r) {
  if (r.config.out.empty()) return;
  std::filesystem::path csv(r.config.out);
  std::ofstream c(csv);
  if (!c) throw DomainError("cannot write " + csv.string());
  write_csv(c, r.records);
  std::ofstream j(std::filesystem::path(csv).replace_extension(".json"));
  j << summary_json(r) << '\n';
}

}  // namespace patree

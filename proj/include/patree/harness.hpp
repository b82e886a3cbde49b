#pragma once

#include "patree/numeric/integrators.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace patree {

/// Flat key=value experiment description. Keys: problem, method, h0, ratio,
/// count, T, seed, eps, out.
struct ExperimentConfig {
  std::string problem = "so3-mixed";  // or so3-rotation, so3-compressible
  std::string method = "euler";          // euler, euler-pre3[c], lrk3, lrk3-pre4[c]
  double h0 = 0.0625;
  double ratio = 0.5;
  int count = 6;
  double T = 1.0;
  unsigned long long seed = 1;
  double eps = 1e-5;
  std::string out;  // CSV path; empty for none. The summary goes next to it as .json.

  /// Strictly decreasing geometric grid h0, h0·ratio, ...
  std::vector<double> grid() const;
  /// Throws DomainError for unknown problem/method or out-of-range values.
  void validate() const;
};

/// Throws ParseError (with line) for malformed lines or unknown keys.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

struct RunRecord {
  double h = 0.0;
  double global_error = 0.0;  // |log(y_T · y_ref(T)⁻¹)| in the frame
  double det_defect = 0.0;    // |det J - 1| of one step at y0
  double wall_ms = 0.0;
  bool ok = true;             // false when the trajectory blew up
  std::string message;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<RunRecord> records;  // sorted by h, descending
  std::optional<double> convergence_slope;
  std::optional<double> volume_slope;
  /// |ref(h_ref) - ref(h_ref/2)| relative to the smallest measured error.
  double reference_check = 0.0;
  double reference_ms = 0.0;
};

/// Least-squares slope of log(value) against log(h), ignoring values below
/// floor. Throws DomainError for fewer than 4 pairs or non-positive h,
/// NumericError when fewer than two points clear the floor.
double estimate_slope(std::span<const std::pair<double, double>> pairs, double floor = 1e-13);

/// Frame coefficients of the problem's field.
template <class S>
numeric::LinearFramedField<S> make_problem(const std::string& id) {
  if (id == "so3-rotation") return numeric::rotation_test_field<S>();
  if (id == "so3-mixed") return numeric::mixed_rotation_test_field<S>();
  if (id == "so3-compressible") return numeric::compressible_test_field<S>();
  throw DomainError("unknown problem '" + id + "'");
}

template <class S>
using StepMap = std::function<numeric::Mat<S>(const numeric::Mat<S>&)>;

/// One step of the named method with step size h on the given field.
template <class S>
StepMap<S> make_step(const std::string& method, const numeric::FramedField<S>& field, S h) {
  using namespace numeric;
  const FrameBasis* basis = &field.basis();
  if (method == "euler")
    return [=, &field](const Mat<S>& y) { return lie_euler_step<S>(coefficients_of(field), y, h, *basis); };
  auto pre_euler = [=, &field](Preprocessor p) -> StepMap<S> {
    return [=, &field](const Mat<S>& y) { return lie_euler_step<S>(PreprocessedField<S>{&field, p, h}, y, h, *basis); };
  };
  auto pre_lrk = [=, &field](Preprocessor p) -> StepMap<S> {
    return [=, &field](const Mat<S>& y) {
      static const ButcherTableau tab = ButcherTableau::lrk3_sqrt5();
      return lrk_step<S>(tab, PreprocessedField<S>{&field, p, h}, y, h, *basis);
    };
  };
  if (method == "euler-pre3") return pre_euler(Preprocessor::Euler3);
  if (method == "euler-pre3c") return pre_euler(Preprocessor::Euler3Corrected);
  if (method == "lrk3")
    return [=, &field](const Mat<S>& y) {
      static const ButcherTableau tab = ButcherTableau::lrk3_sqrt5();
      return lrk_step<S>(tab, coefficients_of(field), y, h, *basis);
    };
  if (method == "lrk3-pre4") return pre_lrk(Preprocessor::Lrk4);
  if (method == "lrk3-pre4c") return pre_lrk(Preprocessor::Lrk4Corrected);
  throw DomainError("unknown method '" + method + "'");
}

/// |det J - 1| for the frame Jacobian J of `step` at y, with columns
/// [8(L(ε) - L(-ε)) - (L(2ε) - L(-2ε))] / 12ε, L(t) = log(step(e^{tA_j}y) ·
/// step(y)⁻¹). Throws NumericError when a probe leaves the log radius.
double jacobian_determinant_defect(const StepMap<numeric::Quad>& step, const numeric::Mat<numeric::Quad>& y,
                                   const numeric::FrameBasis& basis, double eps = 1e-5);

/// y after n = round(T/h) steps of size T/n.
numeric::Mat<double> integrate(const std::string& method, const numeric::FramedField<double>& field,
                               const numeric::Mat<double>& y0, double h, double T);

/// Parallel over the h-grid (OpenMP); results identical to the serial run
/// apart from wall times.
ExperimentResult run_experiment(const ExperimentConfig& cfg);
ExperimentResult run_experiment_serial(const ExperimentConfig& cfg);

/// Header h,global_error,det_defect,wall_ms; classic locale, 17 digits.
void write_csv(std::ostream& os, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& is);
std::string summary_json(const ExperimentResult& r);

/// Writes cfg.out and its .json summary when cfg.out is set.
void save(const ExperimentResult& r);

}  // namespace patree

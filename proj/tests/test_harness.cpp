#include "patree/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace patree;
using namespace patree::numeric;

namespace {
std::vector<std::pair<double, double>> synthetic(double (*g)(double)) {
  std::vector<std::pair<double, double>> out;
  for (int k = 4; k <= 9; ++k) {
    double h = std::ldexp(1.0, -k);
    out.emplace_back(h, g(h));
  }
  return out;
}
}  // namespace

TEST_CASE("slope estimation") {
  CHECK(std::abs(estimate_slope(synthetic([](double h) { return h * h * h; })) - 3.0) < 1e-9);
  CHECK(std::abs(estimate_slope(synthetic([](double h) { return h * h * h + std::pow(h, 6); })) - 3.0) < 0.05);
  CHECK(std::abs(estimate_slope(synthetic([](double) { return 0.25; }))) < 1e-12);
  auto three = synthetic([](double h) { return h; });
  three.resize(3);
  CHECK_THROWS_AS(estimate_slope(three), DomainError);
  CHECK_THROWS_AS(estimate_slope(synthetic([](double) { return 1e-16; })), NumericError);
  // Points under the floor are dropped, not fitted.
  auto mixed = synthetic([](double h) { return h * h; });
  mixed.back().second = 1e-20;
  CHECK(std::abs(estimate_slope(mixed) - 2.0) < 1e-9);
}

TEST_CASE("config parsing") {
  auto c = parse_config("# experiment\nmethod = lrk3-pre4c\nproblem=so3-rotation\nh0=0.125\nratio=0.5\ncount=5\nT=2\nseed=7\neps=1e-6\nout=x.csv\n");
  CHECK(c.method == "lrk3-pre4c");
  CHECK(c.problem == "so3-rotation");
  CHECK(c.grid() == std::vector<double>{0.125, 0.0625, 0.03125, 0.015625, 0.0078125});
  CHECK(c.T == 2.0);
  CHECK(c.seed == 7);
  CHECK(c.eps == 1e-6);
  CHECK(c.out == "x.csv");
  CHECK(parse_config("").method == "euler");
  CHECK_THROWS_AS(parse_config("colour = red"), ParseError);
  CHECK_THROWS_AS(parse_config("h0 = fast"), ParseError);
  CHECK_THROWS_AS(parse_config("no equals sign"), ParseError);
  CHECK_THROWS_AS(parse_config("method = rk4"), DomainError);
  CHECK_THROWS_AS(parse_config("eps = 1e-3"), DomainError);
  CHECK_THROWS_AS(parse_config("ratio = 1.5"), DomainError);
  CHECK_THROWS_AS(parse_config("T = 0"), DomainError);
  try {
    parse_config("method = euler\n\nbogus = 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("CSV round trip") {
  std::vector<RunRecord> rs{{0.0625, 1.5e-3, 2.25e-5, 1.0, true, ""}, {0.03125, 7.5e-4, 5.625e-6, 0.5, true, ""}};
  std::stringstream ss;
  write_csv(ss, rs);
  CHECK(ss.str().rfind("h,global_error,det_defect,wall_ms\n", 0) == 0);
  auto back = read_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[1].h == rs[1].h);
  CHECK(back[1].global_error == rs[1].global_error);
  CHECK(back[0].det_defect == rs[0].det_defect);
  std::stringstream bad("h,x\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad), ParseError);
  std::stringstream bad_row("h,global_error,det_defect,wall_ms\n1;2;3;4\n");
  CHECK_THROWS_AS(read_csv(bad_row), ParseError);
}

TEST_CASE("determinant defect of exact maps") {
  auto basis = FrameBasis::so(3);
  std::mt19937_64 rng(5);
  Mat<Quad> y = reorthonormalize<Quad>(random_rotation(rng).cast<Quad>());
  StepMap<Quad> id = [](const Mat<Quad>& z) { return z; };
  CHECK(jacobian_determinant_defect(id, y, basis) < 1e-25);  // quad roundoff only
  Vec<Quad> c(3);
  c << Quad(0.4), Quad(-1.1), Quad(0.25);
  StepMap<Quad> flow = [&](const Mat<Quad>& z) { return group_exp<Quad>(c, basis, z); };
  CHECK(jacobian_determinant_defect(flow, y, basis) <= 1e-10);
}

TEST_CASE("integration and experiments") {
  auto f = mixed_rotation_test_field();
  std::mt19937_64 rng(6);
  Mat<double> y0 = random_rotation(rng);
  CHECK(orthogonality_defect(integrate("lrk3", f, y0, 1e-3, 1.0)) < 1e-13);
  CHECK_THROWS_AS(make_step<double>("rk4", f, 0.1), DomainError);

  ExperimentConfig cfg;
  cfg.method = "euler";
  auto par = run_experiment(cfg), ser = run_experiment_serial(cfg);
  REQUIRE(par.records.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(par.records[i].h == ser.records[i].h);
    CHECK(par.records[i].global_error == ser.records[i].global_error);
    CHECK(par.records[i].det_defect == ser.records[i].det_defect);
    if (i > 0) CHECK(par.records[i].h < par.records[i - 1].h);
  }
  REQUIRE(par.convergence_slope);
  REQUIRE(par.volume_slope);
  CHECK(std::abs(*par.convergence_slope - 1.0) <= 0.2);
  CHECK(std::abs(*par.volume_slope - 2.0) <= 0.3);
  CHECK(par.reference_check < 0.01);
  std::string json = summary_json(par);
  CHECK(json.find("\"convergence_slope\"") != std::string::npos);

  cfg.method = "lrk3";
  auto lrk = run_experiment(cfg);
  REQUIRE(lrk.convergence_slope);
  CHECK(std::abs(*lrk.convergence_slope - 2.0) <= 0.2);
}

TEST_CASE("the literal rotation field makes every method exact") {
  // f = y v is constant along its own flow, so Df f = 0 and all steps
  // reproduce the flow to roundoff; slopes are not measurable there.
  ExperimentConfig cfg;
  cfg.problem = "so3-rotation";
  cfg.method = "euler";
  auto r = run_experiment(cfg);
  for (const auto& rec : r.records) CHECK(rec.global_error < 1e-12);
  auto f = rotation_test_field();
  std::mt19937_64 rng(8);
  Mat<double> y = random_rotation(rng);
  CHECK((f.jacobian(y) * f.value(y)).norm() < 1e-15);
}

#include "crosscheck.hpp"
#include "patree/harness.hpp"

#include <doctest.h>

using namespace patree;
using namespace patree::numeric;

namespace {
Mat<double> some_point(unsigned seed) {
  std::mt19937_64 rng(seed);
  return random_rotation(rng);
}

// Volume-defect slope of a one-step map family on the mixed problem.
double volume_slope(const std::function<StepMap<Quad>(Quad)>& make) {
  auto y = reorthonormalize<Quad>(some_point(1).cast<Quad>());
  auto basis = FrameBasis::so(3);
  std::vector<std::pair<double, double>> pts;
  for (double h = 1.0 / 16; h >= 1.0 / 512; h /= 2) pts.emplace_back(h, jacobian_determinant_defect(make(Quad(h)), y, basis));
  return estimate_slope(pts);
}
}  // namespace

TEST_CASE("tableaux") {
  auto t = ButcherTableau::lrk3_sqrt5();
  CHECK(t.stages() == 3);
  const double r5 = std::sqrt(5.0);
  CHECK(std::abs(double(t.a(1, 0)) - (-1 + r5) / 12) < 1e-16);
  CHECK(std::abs(double(t.c(2)) - ((-9 - 5 * r5) / 12 + (2 + r5) / 2)) < 1e-15);
  Quad sum = 0;
  for (int i = 0; i < 3; ++i) sum += t.b(i);
  CHECK(abs(sum - 1) < 1e-30);

  auto loaded = load_tableau(default_data_dir() / "lrk3_sqrt5.tab");
  for (int i = 0; i < 3; ++i) {
    CHECK(loaded.b(i) == t.b(i));
    for (int j = 0; j < 3; ++j) CHECK(abs(loaded.a(i, j) - t.a(i, j)) < 1e-32);
  }
  CHECK(abs(evaluate_coefficient("(-1+sqrt5)/12") - t.a(1, 0)) < 1e-33);
  CHECK(evaluate_coefficient("-3/4") == Quad(-0.75));
  CHECK(evaluate_coefficient("2.5e-1") == Quad(0.25));
  CHECK_THROWS_AS(evaluate_coefficient("1/0"), ParseError);
  CHECK_THROWS_AS(evaluate_coefficient("sqrt7"), ParseError);
  CHECK_THROWS_AS(parse_tableau("2\n0 0\n1 0\n1"), ParseError);
  CHECK_THROWS_AS(parse_tableau("2\n0 1\n0 0\n1/2 1/2"), DomainError);
  CHECK_THROWS_AS(parse_tableau(""), ParseError);
  auto mid = parse_tableau("# midpoint\n2\n0 0\n1/2 0\n0 1\n");
  CHECK(mid.c(1) == Quad(0.5));
}

TEST_CASE("steppers") {
  auto f = mixed_rotation_test_field();
  auto basis = f.basis();
  auto y = some_point(2);
  auto coeffs = coefficients_of<double>(f);
  CHECK(lie_euler_step<double>(coeffs, y, 0.0, basis) == y);
  CHECK(lrk_step<double>(ButcherTableau::euler(), coeffs, y, 0.1, basis) == lie_euler_step<double>(coeffs, y, 0.1, basis));
  CHECK_THROWS_AS(lie_euler_step<double>(coeffs, y, -0.1, basis), DomainError);

  int calls = 0;
  CoefficientField<double> counted = [&](const Mat<double>& z) {
    ++calls;
    return f.value(z);
  };
  lrk_step<double>(ButcherTableau::lrk3_sqrt5(), counted, y, 0.1, basis);
  CHECK(calls == 3);

  // A constant frame field flows along a one-parameter subgroup; every step is exact.
  Vec<double> c(3);
  c << 0.3, -0.2, 0.9;
  CoefficientField<double> constant = [&](const Mat<double>&) { return c; };
  Mat<double> exact = group_exp<double>(Vec<double>(0.7 * c), basis, y);
  CHECK((lie_euler_step<double>(constant, y, 0.7, basis) - exact).norm() < 1e-14);
  CHECK((lrk_step<double>(ButcherTableau::lrk3_sqrt5(), constant, y, 0.7, basis) - exact).norm() < 1e-14);

  auto a = lrk_step<double>(ButcherTableau::lrk3_sqrt5(), coeffs, y, 0.05, basis);
  auto b = lrk_step<double>(ButcherTableau::lrk3_sqrt5(), coeffs, y, 0.05, basis);
  CHECK(a == b);
}

TEST_CASE("hand-coded preprocessors agree with their aromatic series") {
  auto fields = {rotation_test_field(), mixed_rotation_test_field()};
  unsigned seed = 1;
  for (const auto& f : fields) {
    CHECK(testing::crosscheck(preprocessor_series("euler3"), preprocessed_euler_field<double>, f, 100, seed) < 1e-10);
    CHECK(testing::crosscheck(preprocessor_series("lrk4"), preprocessed_lrk_field<double>, f, 100, seed) < 1e-10);
    CHECK(testing::crosscheck(preprocessor_series("euler3c"), corrected_euler_field<double>, f, 100, seed) < 1e-10);
    CHECK(testing::crosscheck(preprocessor_series("lrk4c"), corrected_lrk_field<double>, f, 100, seed) < 1e-10);
    ++seed;
  }
  // A transcription slip is caught: (1+√5) in place of (1-√5).
  auto wrong = preprocessor_series("lrk4");
  wrong.sqrt5 = Rational(-1) * wrong.sqrt5;
  CHECK(testing::crosscheck(wrong, preprocessed_lrk_field<double>, mixed_rotation_test_field(), 20, 9) > 1e-6);
}

TEST_CASE("preprocessed fields reduce to f as h -> 0") {
  auto f = mixed_rotation_test_field();
  auto y = some_point(3);
  auto rem = [&](auto field, double h) { return (field(f, y, h) / h - f.value(y)).norm(); };
  std::vector<std::pair<double, double>> e3, l4, e3c, l4c;
  for (double h = 1e-1; h > 1e-4; h /= 2) {
    e3.emplace_back(h, rem(preprocessed_euler_field<double>, h));
    l4.emplace_back(h, rem(preprocessed_lrk_field<double>, h));
    e3c.emplace_back(h, rem(corrected_euler_field<double>, h));
    l4c.emplace_back(h, rem(corrected_lrk_field<double>, h));
  }
  CHECK(estimate_slope(e3) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(estimate_slope(e3c) == doctest::Approx(1.0).epsilon(0.05));
  CHECK(estimate_slope(l4) == doctest::Approx(2.0).epsilon(0.05));
  CHECK(estimate_slope(l4c) == doctest::Approx(2.0).epsilon(0.05));

  // Fields without derivatives are left alone.
  FiniteDifferenceField constant(FrameBasis::so(3), [](const Mat<double>&) { return Vec<double>::Constant(3, 0.4); });
  for (double h : {0.1, 0.01}) {
    CHECK((preprocessed_euler_field<double>(constant, y, h) - h * constant.value(y)).norm() < 1e-12);
    CHECK((preprocessed_lrk_field<double>(constant, y, h) - h * constant.value(y)).norm() < 1e-12);
  }
}

TEST_CASE("volume order of the corrected preprocessors") {
  auto f = mixed_rotation_test_field<Quad>();
  auto basis = f.basis();
  CHECK(volume_slope([&](Quad h) { return make_step<Quad>("euler", f, h); }) == doctest::Approx(2.0).epsilon(0.1));
  CHECK(volume_slope([&](Quad h) { return make_step<Quad>("euler-pre3c", f, h); }) == doctest::Approx(4.0).epsilon(0.1));
  CHECK(volume_slope([&](Quad h) { return make_step<Quad>("lrk3-pre4c", f, h); }) == doctest::Approx(5.0).epsilon(0.1));
  // The published coefficients leave the third-order defect in place.
  CHECK(volume_slope([&](Quad h) { return make_step<Quad>("euler-pre3", f, h); }) < 3.5);
  CHECK(volume_slope([&](Quad h) { return make_step<Quad>("lrk3-pre4", f, h); }) < 3.5);

  // Regression guard: (5+√5)/48 where (5-√5)/48 belongs drops the order.
  static const ButcherTableau tab = ButcherTableau::lrk3_sqrt5();
  double swapped = volume_slope([&](Quad h) -> StepMap<Quad> {
    return [&f, &basis, h](const Mat<Quad>& y) {
      CoefficientField<Quad> g = [&f, h](const Mat<Quad>& z) {
        detail::Derived<Quad> d(f, z);
        return Vec<Quad>(corrected_lrk_field<Quad>(f, z, h) / h + h * h * sqrt(Quad(5)) / 24 * (d.torsion + d.trace2) * d.f);
      };
      return lrk_step<Quad>(tab, g, y, h, basis);
    };
  });
  CHECK(swapped < 4.5);
}

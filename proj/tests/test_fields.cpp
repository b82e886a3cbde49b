#include "patree/numeric/elementary.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace patree;
using namespace patree::numeric;

namespace {
std::vector<Mat<double>> points(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::vector<Mat<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(random_rotation(rng));
  return out;
}
Element E(const char* s) { return parse_element(s); }
}  // namespace

TEST_CASE("analytic frame derivatives match finite differences") {
  auto f = rotation_test_field();
  FiniteDifferenceField fd(f.basis(), [&](const Mat<double>& y) { return f.value(y); });
  for (const auto& y : points(20, 1)) {
    CHECK((f.derivative(y, {}) - f.value(y)).norm() == 0.0);
    for (int j = 0; j < 3; ++j) {
      const int idx[] = {j};
      CHECK((f.derivative(y, idx) - fd.derivative(y, idx)).cwiseAbs().maxCoeff() < 1e-6);
      // E_j[f](y) = (A_j y v)_i for the literal field.
      Vec<double> v(3);
      v << 1.0, 0.5, 1.0 / 3.0;
      CHECK((f.derivative(y, idx) - f.basis()[j] * y * v).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
  const int four[] = {0, 1, 2, 0};
  CHECK_THROWS_AS(fd.derivative(points(1, 2)[0], four), NumericError);
}

TEST_CASE("second derivatives satisfy the commutation relation") {
  for (const auto& f : {rotation_test_field(), mixed_rotation_test_field(), compressible_test_field()}) {
    const auto& c = f.basis().structure();
    for (const auto& y : points(20, 3))
      for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j) {
          const int kj[] = {k, j}, jk[] = {j, k};
          Vec<double> lhs = f.derivative(y, kj) - f.derivative(y, jk), rhs = Vec<double>::Zero(3);
          for (int l = 0; l < 3; ++l) {
            const int one[] = {l};
            rhs += c(l, k, j) * f.derivative(y, one);
          }
          CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
  }
}

TEST_CASE("numeric divergence") {
  auto pts = points(100, 4);
  for (const auto& f : {rotation_test_field(), mixed_rotation_test_field()}) {
    double worst = 0;
    for (const auto& y : pts) worst = std::max(worst, std::abs(divergence_numeric(f, y)));
    CHECK(worst <= 1e-9);
  }
  FiniteDifferenceField constant(FrameBasis::so(3), [](const Mat<double>&) { return Vec<double>::Constant(3, 0.7); });
  auto comp = compressible_test_field();
  for (const auto& y : points(20, 5)) {
    CHECK(std::abs(divergence_numeric(constant, y)) < 1e-9);
    double exact = divergence_numeric(comp, y);
    double fd = divergence_fd([&](const Mat<double>& z) { return comp.value(z); }, comp.basis(), y);
    CHECK(std::abs(exact - fd) < 1e-8);
  }
  double largest = 0;
  for (const auto& y : pts) largest = std::max(largest, std::abs(divergence_numeric(comp, y)));
  CHECK(largest > 0.1);
}

TEST_CASE("elementary differentials of small elements") {
  for (const auto& f : {rotation_test_field(), mixed_rotation_test_field(), compressible_test_field()})
    for (const auto& y : points(10, 6)) {
      CHECK((evaluate_vector(E("o"), f, y) - f.value(y)).norm() == 0.0);
      CHECK(std::abs(evaluate_scalar(E("A[(x -> o)]"), f, y) - divergence_numeric(f, y)) < 1e-14);
      CHECK((evaluate_vector(E("(o -> o)"), f, y) - f.jacobian(y) * f.value(y)).norm() < 1e-14);
      CHECK(std::abs(evaluate_scalar(E("A[(x -> o), (x -> o)]"), f, y) - (f.jacobian(y) * f.jacobian(y)).trace()) < 1e-14);
      Vec<double> b = f.basis().structure().bracket<double>(f.value(y), evaluate_vector(E("(o -> o)"), f, y));
      CHECK((evaluate_vector(E("[o, (o -> o)]"), f, y) - b).norm() < 1e-14);
      double h = 0.1;
      CHECK((evaluate_vector(E("(o o -> o)"), f, y, h) - h * h * h * evaluate_vector(E("(o o -> o)"), f, y)).norm() < 1e-15);
    }
  auto f = rotation_test_field();
  auto y = points(1, 7)[0];
  CHECK_THROWS_AS(evaluate_vector(E("(? -> o)"), f, y), DomainError);
  CHECK_THROWS_AS(evaluate_vector(E("o:a"), f, y), DomainError);
  CHECK_THROWS_AS(evaluate_vector(E("A[(x -> o)]"), f, y), DomainError);
  CHECK_THROWS_AS(evaluate_scalar(E("o"), f, y), DomainError);
}

TEST_CASE("elementary differentials are linear") {
  testing::Rng rng(8);
  auto f = mixed_rotation_test_field();
  auto pts = points(20, 9);
  for (int i = 0; i < 100; ++i) {
    int n = testing::uniform(rng, 1, 4);
    Element a = testing::random_element(rng, n), b = testing::random_element(rng, n);
    const auto& y = pts[static_cast<std::size_t>(i % 20)];
    Vec<double> lhs = evaluate_vector(Rational(3, 2) * a - b, f, y);
    Vec<double> rhs = 1.5 * evaluate_vector(a, f, y) - evaluate_vector(b, f, y);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12 * (1 + rhs.norm()));
  }
}

TEST_CASE("divergence morphism on every order <= 3 basis element") {
  std::vector<Element> basis;
  for (int n = 1; n <= 3; ++n)
    for (int a = 0; a < n; ++a)
      for (const auto& m : enumerate_multiaromas(a))
        for (const auto& t : enumerate_trees(n - a)) basis.push_back(m * Element::tree(t));
  basis.push_back(E("[o, (o -> o)]"));
  CHECK(basis.size() >= 11);
  auto pts = points(20, 10);
  for (const auto& f : {rotation_test_field(), mixed_rotation_test_field(), compressible_test_field()}) {
    double worst = 0;
    for (const auto& t : basis)
      for (const auto& y : pts) worst = std::max(worst, morphism_defect(t, f, y));
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("degenerate aromas vanish exactly for divergence-free fields") {
  auto pts = points(100, 11);
  for (const auto& f : {rotation_test_field(), mixed_rotation_test_field()})
    for (const auto& row : degeneracy_check(f, pts)) CHECK_MESSAGE(row.max_abs <= 1e-8, row.pattern);
  for (const auto& row : degeneracy_check(compressible_test_field(), pts)) CHECK_MESSAGE(row.max_abs > 1e-3, row.pattern);
}

TEST_CASE("reduction of crossed-then-subtree aromas") {
  for (const auto& f : {rotation_test_field(), mixed_rotation_test_field()})
    for (const auto& y : points(20, 12)) {
      CHECK(std::abs(evaluate_scalar(E("A[(x o -> o)]"), f, y) - reduction_rhs(f.value(y), f, y)) < 1e-6);
      Vec<double> g = evaluate_vector(E("(o -> o)"), f, y);
      CHECK(std::abs(evaluate_scalar(E("A[(x (o -> o) -> o)]"), f, y) - reduction_rhs(g, f, y)) < 1e-6);
    }
}

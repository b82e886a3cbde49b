#include "patree/numeric/framed_field.hpp"

namespace patree::numeric {

namespace {

Mat<double> shift(const FrameBasis& basis, int j, double t, const Mat<double>& y) {
  Vec<double> v = Vec<double>::Zero(basis.size());
  v(j) = t;
  return group_exp<double>(v, basis, y);
}

}  // namespace

Vec<double> FiniteDifferenceField::derivative(const Mat<double>& y, std::span<const int> idx) const {
  static constexpr double kSteps[] = {0.0, 1e-5, 1e-4, 1e-3};
  if (idx.size() > 3) throw NumericError("finite differences stop at third frame derivatives");
  return nested(y, idx, kSteps[idx.size()]);
}

Vec<double> FiniteDifferenceField::nested(const Mat<double>& y, std::span<const int> idx, double step) const {
  if (idx.empty()) return f_(y);
  const int j = idx.front();
  auto rest = idx.subspan(1);
  return (nested(shift(basis_, j, step, y), rest, step) - nested(shift(basis_, j, -step, y), rest, step)) /
         (2 * step);
}

double divergence_fd(const std::function<Vec<double>(const Mat<double>&)>& g, const FrameBasis& basis,
                     const Mat<double>& y, double eps) {
  double div = 0;
  for (int i = 0; i < basis.size(); ++i) div += (g(shift(basis, i, eps, y))(i) - g(shift(basis, i, -eps, y))(i)) / (2 * eps);
  return div;
}

}  // namespace patree::numeric

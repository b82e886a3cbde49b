#include "patree/numeric/lie_group.hpp"

namespace patree::numeric {

FrameBasis FrameBasis::so(int d) {
  if (d < 2) throw DomainError("so(d) needs d >= 2");
  std::vector<Mat<double>> gens;
  if (d == 3) {
    for (int i = 0; i < 3; ++i) {
      Mat<double> a = Mat<double>::Zero(3, 3);
      int j = (i + 1) % 3, k = (i + 2) % 3;
      a(k, j) = 1;
      a(j, k) = -1;
      gens.push_back(a);
    }
  } else {
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        Mat<double> g = Mat<double>::Zero(d, d);
        g(a, b) = 1;
        g(b, a) = -1;
        gens.push_back(g);
      }
  }
  return FrameBasis(std::move(gens));
}

FrameBasis::FrameBasis(std::vector<Mat<double>> generators) : a_(std::move(generators)) {
  if (a_.empty()) throw DomainError("a frame basis needs at least one generator");
  d_ = static_cast<int>(a_.front().rows());
  for (const auto& a : a_) {
    if (a.rows() != d_ || a.cols() != d_) throw DomainError("generators must share one square size");
    if ((a + a.transpose()).cwiseAbs().maxCoeff() > 1e-12) throw DomainError("generators must be skew-symmetric");
  }
  const int m = size();
  gram_.resize(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) gram_(i, j) = a_[i].cwiseProduct(a_[j]).sum();
  if (gram_.fullPivLu().rank() < m) throw DomainError("generators are linearly dependent");

  c_ = StructureConstants(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Mat<double> comm = a_[i] * a_[j] - a_[j] * a_[i];
      Vec<double> coef = coefficients<double>(comm);
      if ((combine<double>(coef) - comm).cwiseAbs().maxCoeff() > 1e-10)
        throw DomainError("commutator leaves the span: not a subalgebra");
      for (int k = 0; k < m; ++k) c_(k, i, j) = -coef(k);
    }
}

}  // namespace patree::numeric

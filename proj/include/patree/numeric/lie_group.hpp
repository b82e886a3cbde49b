#pragma once

#include "patree/errors.hpp"

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cmath>
#include <vector>

namespace patree::numeric {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Quadruple precision, used where one-step defects sit near 1e-14.
using Quad = boost::multiprecision::float128;

/// Dense c^k_ij with ⟦E_i, E_j⟧_J = Σ_k c^k_ij E_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int m) : m_(m), c_(static_cast<std::size_t>(m * m * m), 0.0) {}

  int size() const { return m_; }
  double operator()(int k, int i, int j) const { return c_[index(k, i, j)]; }
  double& operator()(int k, int i, int j) { return c_[index(k, i, j)]; }

  /// [x, y]^k = x^i y^j c^k_ij.
  template <class S>
  Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
    Vec<S> out = Vec<S>::Zero(m_);
    for (int k = 0; k < m_; ++k)
      for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
          if (double c = (*this)(k, i, j); c != 0.0) out(k) += x(i) * y(j) * S(c);
    return out;
  }

 private:
  std::size_t index(int k, int i, int j) const { return static_cast<std::size_t>((k * m_ + i) * m_ + j); }

  int m_ = 0;
  std::vector<double> c_;
};

/// Basis (A_1, ..., A_m) of a matrix Lie algebra of skew-symmetric d×d
/// matrices, with the right-invariant frame E_i(y) = A_i y.
class FrameBasis {
 public:
  /// so(d). For d = 3 the hat basis, A_i e_j = e_i × e_j, so that
  /// Σ u^i A_i = hat(u); otherwise e_a e_bᵀ - e_b e_aᵀ for a < b.
  static FrameBasis so(int d = 3);

  /// Throws DomainError for an empty list, size mismatch, non-skew
  /// generators, linear dependence, or commutators outside the span.
  explicit FrameBasis(std::vector<Mat<double>> generators);

  int dim() const { return d_; }
  int size() const { return static_cast<int>(a_.size()); }
  const Mat<double>& operator[](int i) const { return a_[static_cast<std::size_t>(i)]; }
  const StructureConstants& structure() const { return c_; }

  template <class S>
  Mat<S> generator(int i) const {
    return (*this)[i].template cast<S>();
  }

  /// Σ v^i A_i.
  template <class S>
  Mat<S> combine(const Vec<S>& v) const {
    Mat<S> x = Mat<S>::Zero(d_, d_);
    for (int i = 0; i < size(); ++i) x += v(i) * generator<S>(i);
    return x;
  }

  /// Coefficients of x in the basis (least squares in the Frobenius inner
  /// product; exact for x in the span).
  template <class S>
  Vec<S> coefficients(const Mat<S>& x) const {
    const int m = size();
    Vec<S> rhs(m);
    for (int i = 0; i < m; ++i) rhs(i) = (generator<S>(i).cwiseProduct(x)).sum();
    return gram_.template cast<S>().ldlt().solve(rhs);
  }

 private:
  int d_ = 0;
  std::vector<Mat<double>> a_;
  Mat<double> gram_;
  StructureConstants c_;
};

/// c^k_ij of the frame's Jacobi bracket. For right-invariant fields
/// ⟦E_A, E_B⟧_J = E_[B,A], so c is minus the expansion of [A_i, A_j].
inline const StructureConstants& structure_constants(const FrameBasis& b) { return b.structure(); }

/// ‖yᵀy - I‖_∞ (max abs entry).
template <class S>
double orthogonality_defect(const Mat<S>& y) {
  Mat<S> e = y.transpose() * y - Mat<S>::Identity(y.rows(), y.cols());
  return static_cast<double>(e.cwiseAbs().maxCoeff());
}

/// Pulls a near-orthogonal matrix back onto the group by Newton-Schulz
/// polar iterations.
template <class S>
Mat<S> reorthonormalize(Mat<S> y) {
  for (int it = 0; it < 4; ++it) y = S(1.5) * y - S(0.5) * y * y.transpose() * y;
  return y;
}

namespace detail {

template <class S>
void check_finite(const Mat<S>& x, const char* what) {
  using std::isfinite;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!isfinite(x(i))) throw NumericError(std::string(what) + ": non-finite entry");
}

/// exp of a 3×3 skew matrix by Rodrigues' formula.
template <class S>
Mat<S> rodrigues(const Mat<S>& x) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  S w0 = x(2, 1), w1 = x(0, 2), w2 = x(1, 0);
  S theta2 = w0 * w0 + w1 * w1 + w2 * w2;
  S theta = sqrt(theta2);
  S a, b;  // sin θ / θ and (1 - cos θ) / θ²
  if (theta < S(1e-6)) {
    a = S(1) - theta2 / 6 + theta2 * theta2 / 120;
    b = S(0.5) - theta2 / 24 + theta2 * theta2 / 720;
  } else {
    S half = sin(theta / 2) / theta;
    a = sin(theta) / theta;
    b = 2 * half * half;
  }
  Mat<S> id = Mat<S>::Identity(3, 3);
  return id + a * x + b * (x * x);
}

/// exp by scaling and squaring with a Taylor core.
template <class S>
Mat<S> expm(const Mat<S>& x) {
  using std::ldexp;
  const auto n = x.rows();
  double norm = static_cast<double>(x.cwiseAbs().rowwise().sum().maxCoeff());
  int s = 0;
  while (norm > 0.25) {
    norm /= 2;
    ++s;
  }
  Mat<S> a = x / S(std::ldexp(1.0, s));
  Mat<S> term = Mat<S>::Identity(n, n), sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * a / S(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

/// Principal logarithm by inverse scaling and squaring (Denman-Beavers
/// square roots, then a Gregory series).
template <class S>
Mat<S> logm(Mat<S> r) {
  const auto n = r.rows();
  const Mat<S> id = Mat<S>::Identity(n, n);
  int k = 0;
  while (static_cast<double>((r - id).cwiseAbs().rowwise().sum().maxCoeff()) > 0.1) {
    if (++k > 40) throw NumericError("logarithm: no convergence");
    Mat<S> y = r, z = id;
    for (int it = 0; it < 60; ++it) {
      Mat<S> yi = y.inverse(), zi = z.inverse();
      y = S(0.5) * (y + zi);
      z = S(0.5) * (z + yi);
    }
    r = y;
  }
  // log r = 2 Σ_{j odd} u^j / j with u = (r - I)(r + I)^{-1}.
  Mat<S> u = (r - id) * (r + id).inverse();
  Mat<S> u2 = u * u, term = u, sum = u;
  for (int j = 3; j < 80; j += 2) {
    term = term * u2;
    sum += term / S(j);
  }
  return S(2) * S(std::ldexp(1.0, k)) * sum;
}

}  // namespace detail

/// exp(Σ v^i A_i) · y.
template <class S>
Mat<S> group_exp(const Vec<S>& v, const FrameBasis& basis, const Mat<S>& y) {
  detail::check_finite<S>(v, "group_exp");
  detail::check_finite<S>(y, "group_exp");
  Mat<S> x = basis.combine(v);
  Mat<S> e = basis.dim() == 3 ? detail::rodrigues(x) : detail::expm(x);
  return e * y;
}

/// w with exp(Σ w^i A_i) = y2 · y1⁻¹. Throws NumericError when the relative
/// rotation angle reaches π - 1e-6.
template <class S>
Vec<S> group_log(const Mat<S>& y2, const Mat<S>& y1, const FrameBasis& basis) {
  using std::atan2;
  using std::sqrt;
  detail::check_finite(y2, "group_log");
  detail::check_finite(y1, "group_log");
  Mat<S> r = y2 * y1.transpose();
  if (basis.dim() != 3) return basis.coefficients<S>(detail::logm(r));

  S s0 = (r(2, 1) - r(1, 2)) / 2, s1 = (r(0, 2) - r(2, 0)) / 2, s2 = (r(1, 0) - r(0, 1)) / 2;
  S sin_t = sqrt(s0 * s0 + s1 * s1 + s2 * s2);
  S cos_t = (r.trace() - 1) / 2;
  S theta = atan2(sin_t, cos_t);
  if (static_cast<double>(theta) >= 3.141592653589793 - 1e-6)
    throw NumericError("group_log: rotation angle outside the injectivity radius");
  S scale = sin_t < S(1e-8) ? S(1) + theta * theta / 6 : theta / sin_t;
  Mat<S> x = Mat<S>::Zero(3, 3);
  x(2, 1) = scale * s0;
  x(1, 2) = -x(2, 1);
  x(0, 2) = scale * s1;
  x(2, 0) = -x(0, 2);
  x(1, 0) = scale * s2;
  x(0, 1) = -x(1, 0);
  return basis.coefficients<S>(x);
}

}  // namespace patree::numeric

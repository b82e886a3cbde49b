#pragma once

#include "patree/numeric/lie_group.hpp"

#include <functional>
#include <memory>
#include <random>
#include <span>

namespace patree::numeric {

/// Vector field F = f^i E_i on the group, given by its frame components and
/// iterated frame derivatives. Implementations must be reentrant.
template <class S>
class FramedField {
 public:
  virtual ~FramedField() = default;

  virtual const FrameBasis& basis() const = 0;
  int size() const { return basis().size(); }

  /// (f^1, ..., f^m)(y).
  virtual Vec<S> value(const Mat<S>& y) const = 0;

  /// E_{j1}[E_{j2}[... E_{jk}[f^i] ...]](y) for all i, with idx = (j1..jk)
  /// listed outermost first. Empty idx gives the value. Throws
  /// NumericError when the order is not available.
  virtual Vec<S> derivative(const Mat<S>& y, std::span<const int> idx) const = 0;

  /// Df(i, j) = E_j[f^i](y).
  Mat<S> jacobian(const Mat<S>& y) const {
    const int m = size();
    Mat<S> df(m, m);
    for (int j = 0; j < m; ++j) {
      const int idx[] = {j};
      df.col(j) = derivative(y, idx);
    }
    return df;
  }
};

/// f^i(y) = <W_i, y> (Frobenius). Exact derivatives of every order:
/// E_{j1}[...E_{jk}[f^i]] = <W_i, A_{jk} ... A_{j1} y>.
template <class S>
class LinearFramedField final : public FramedField<S> {
 public:
  LinearFramedField(FrameBasis basis, std::vector<Mat<double>> weights)
      : basis_(std::move(basis)) {
    if (static_cast<int>(weights.size()) != basis_.size()) throw DomainError("one weight matrix per frame direction");
    for (const auto& w : weights) {
      if (w.rows() != basis_.dim() || w.cols() != basis_.dim()) throw DomainError("weight matrix has the wrong size");
      w_.push_back(w.template cast<S>());
    }
    for (int i = 0; i < basis_.size(); ++i) a_.push_back(basis_.template generator<S>(i));
  }

  const FrameBasis& basis() const override { return basis_; }

  Vec<S> value(const Mat<S>& y) const override { return contract(y); }

  Vec<S> derivative(const Mat<S>& y, std::span<const int> idx) const override {
    Mat<S> z = y;
    for (int j : idx) z = a_.at(static_cast<std::size_t>(j)) * z;
    return contract(z);
  }

  const std::vector<Mat<S>>& weights() const { return w_; }

 private:
  Vec<S> contract(const Mat<S>& z) const {
    Vec<S> out(static_cast<Eigen::Index>(w_.size()));
    for (std::size_t i = 0; i < w_.size(); ++i) out(static_cast<Eigen::Index>(i)) = w_[i].cwiseProduct(z).sum();
    return out;
  }

  FrameBasis basis_;
  std::vector<Mat<S>> w_;
  std::vector<Mat<S>> a_;
};

/// Value-only field with central finite-difference frame derivatives up to
/// order 3: E_j[g](y) ≈ (g(e^{εA_j}y) - g(e^{-εA_j}y)) / 2ε, nested.
/// Steps per nesting depth: 1e-5 for first, 1e-4 for second, 1e-3 for
/// third derivatives.
class FiniteDifferenceField final : public FramedField<double> {
 public:
  using Fn = std::function<Vec<double>(const Mat<double>&)>;

  FiniteDifferenceField(FrameBasis basis, Fn f) : basis_(std::move(basis)), f_(std::move(f)) {}

  const FrameBasis& basis() const override { return basis_; }
  Vec<double> value(const Mat<double>& y) const override { return f_(y); }
  Vec<double> derivative(const Mat<double>& y, std::span<const int> idx) const override;

 private:
  Vec<double> nested(const Mat<double>& y, std::span<const int> idx, double step) const;

  FrameBasis basis_;
  Fn f_;
};

/// Σ_i E_i[f^i](y).
template <class S>
S divergence_numeric(const FramedField<S>& f, const Mat<S>& y) {
  S div = 0;
  for (int i = 0; i < f.size(); ++i) {
    const int idx[] = {i};
    div += f.derivative(y, idx)(i);
  }
  return div;
}

/// Single component of an iterated frame derivative.
template <class S>
S frame_derivative(const FramedField<S>& f, int component, std::span<const int> idx, const Mat<S>& y) {
  return f.derivative(y, idx)(component);
}

/// Central-difference frame divergence of an arbitrary frame-coefficient
/// map g, Σ_i E_i[g^i](y), with step eps.
double divergence_fd(const std::function<Vec<double>(const Mat<double>&)>& g, const FrameBasis& basis,
                     const Mat<double>& y, double eps = 1e-5);

/// The default test problem y' = hat(y v) y on SO(3), f(y) = y v,
/// v = (1, 1/2, 1/3). Divergence-free.
template <class S = double>
LinearFramedField<S> rotation_test_field(const Eigen::Vector3d& v = Eigen::Vector3d(1.0, 0.5, 1.0 / 3.0)) {
  std::vector<Mat<double>> w;
  for (int i = 0; i < 3; ++i) {
    Mat<double> wi = Mat<double>::Zero(3, 3);
    wi.row(i) = v.transpose();
    w.push_back(wi);
  }
  return LinearFramedField<S>(FrameBasis::so(3), std::move(w));
}

/// f^i(y) = (y w_i)_i with one vector per row: w_1 = (1, 1/2, 1/3),
/// w_2 = (1/3, 1, 1/2), w_3 = (1/2, 1/3, 1). Divergence-free since
/// A_i e_i = 0. With equal rows this is the field above, whose flow
/// y0 exp(t hat(v)) keeps f constant and makes every Lie-Euler/LRK step
/// exact; distinct rows break that symmetry.
template <class S = double>
LinearFramedField<S> mixed_rotation_test_field() {
  const double w[3][3] = {{1.0, 0.5, 1.0 / 3.0}, {1.0 / 3.0, 1.0, 0.5}, {0.5, 1.0 / 3.0, 1.0}};
  std::vector<Mat<double>> ws;
  for (int i = 0; i < 3; ++i) {
    Mat<double> wi = Mat<double>::Zero(3, 3);
    for (int j = 0; j < 3; ++j) wi(i, j) = w[i][j];
    ws.push_back(wi);
  }
  return LinearFramedField<S>(FrameBasis::so(3), std::move(ws));
}

/// A field with nonzero divergence: f^1(y) = y_22 (one-based), f^2 = f^3 = 0.
template <class S = double>
LinearFramedField<S> compressible_test_field() {
  std::vector<Mat<double>> w(3, Mat<double>::Zero(3, 3));
  w[0](1, 1) = 1.0;
  return LinearFramedField<S>(FrameBasis::so(3), std::move(w));
}

/// Random rotation from a unit quaternion drawn with the given engine.
template <class Rng>
Mat<double> random_rotation(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Eigen::Quaterniond q(n(rng), n(rng), n(rng), n(rng));
  q.normalize();
  return q.toRotationMatrix();
}

}  // namespace patree::numeric

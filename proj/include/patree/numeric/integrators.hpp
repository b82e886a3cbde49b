#pragma once

#include "patree/numeric/framed_field.hpp"

#include <filesystem>
#include <functional>
#include <string_view>

namespace patree::numeric {

/// Explicit Butcher tableau. Coefficients are held in quadruple precision
/// and cast to the working scalar on use.
class ButcherTableau {
 public:
  /// Throws DomainError for size mismatches or a nonzero entry on or above
  /// the diagonal.
  ButcherTableau(std::vector<std::vector<Quad>> a, std::vector<Quad> b);

  static ButcherTableau euler();
  /// Three-stage tableau with √5 coefficients paired with the fourth-order
  /// preprocessor.
  static ButcherTableau lrk3_sqrt5();

  int stages() const { return static_cast<int>(b_.size()); }
  const Quad& a(int i, int j) const { return a_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const Quad& b(int i) const { return b_[static_cast<std::size_t>(i)]; }
  Quad c(int i) const;

 private:
  std::vector<std::vector<Quad>> a_;
  std::vector<Quad> b_;
};

/// Text format: stage count s, then s rows of A, then b; whitespace
/// separated; '#' starts a comment. Entries are arithmetic expressions over
/// numbers and the token sqrt5 (+ - * / and parentheses).
ButcherTableau parse_tableau(std::string_view text);
ButcherTableau load_tableau(const std::filesystem::path& path);

/// Evaluates one tableau entry expression.
Quad evaluate_coefficient(std::string_view expr);

/// Frame coefficients v(y) of the field the stepper freezes: a step moves
/// along exp(h Σ v^d(Y) A_d).
template <class S>
using CoefficientField = std::function<Vec<S>(const Mat<S>&)>;

template <class S>
CoefficientField<S> coefficients_of(const FramedField<S>& f) {
  return [&f](const Mat<S>& y) { return f.value(y); };
}

/// y_{n+1} = exp(h f^d(y_n) E_d) y_n.
template <class S>
Mat<S> lie_euler_step(const CoefficientField<S>& f, const Mat<S>& y, S h, const FrameBasis& basis) {
  if (h < S(0)) throw DomainError("negative step size");
  Vec<S> v = f(y);
  return group_exp<S>(Vec<S>(h * v), basis, y);
}

/// Explicit Lie-Runge-Kutta step: stage i freezes Σ_j a_ij f(Y_j) at y_n.
/// Calls the field exactly s times.
template <class S>
Mat<S> lrk_step(const ButcherTableau& tab, const CoefficientField<S>& f, const Mat<S>& y, S h,
                const FrameBasis& basis) {
  if (h < S(0)) throw DomainError("negative step size");
  const int s = tab.stages();
  std::vector<Vec<S>> k;
  k.reserve(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) {
    Vec<S> v = Vec<S>::Zero(basis.size());
    for (int j = 0; j < i; ++j)
      if (tab.a(i, j) != 0) v += S(tab.a(i, j)) * k[static_cast<std::size_t>(j)];
    k.push_back(f(i == 0 ? y : group_exp<S>(Vec<S>(h * v), basis, y)));
  }
  Vec<S> v = Vec<S>::Zero(basis.size());
  for (int i = 0; i < s; ++i)
    if (tab.b(i) != 0) v += S(tab.b(i)) * k[static_cast<std::size_t>(i)];
  return group_exp<S>(Vec<S>(h * v), basis, y);
}

namespace detail {

/// Ingredients shared by the preprocessors; first frame derivatives only.
template <class S>
struct Derived {
  Vec<S> f;
  Mat<S> df;      // df(i, j) = E_j[f^i]
  Vec<S> dff;     // f^j E_j[f^i]
  Vec<S> dfdff;   // f^k E_k[f^j] E_j[f^i]
  S torsion = 0;  // f^k ⟦E_j, E_k⟧_J[f^j] = f^k c^l_jk E_l[f^j]
  S trace2 = 0;   // E_j[f^k] E_k[f^j]
  S trace3 = 0;   // tr(Df Df Df)
  S nested = 0;   // f^l f^k ⟦⟦E_j,E_l⟧_J,E_k⟧_J[f^j]
  S mixed = 0;    // f^l E_j[f^k] ⟦E_k,E_l⟧_J[f^j]

  Derived(const FramedField<S>& field, const Mat<S>& y) {
    const auto& c = field.basis().structure();
    const int m = field.size();
    f = field.value(y);
    df = field.jacobian(y);
    dff = df * f;
    dfdff = df * dff;
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          if (c(l, j, k) != 0.0) torsion += f(k) * S(c(l, j, k)) * df(j, l);
    trace2 = (df * df).trace();
    trace3 = (df * df * df).trace();
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < m; ++l)
        for (int p = 0; p < m; ++p)
          if (c(p, j, l) != 0.0)
            for (int k = 0; k < m; ++k)
              for (int q = 0; q < m; ++q)
                if (c(q, p, k) != 0.0) nested += f(l) * f(k) * S(c(p, j, l)) * S(c(q, p, k)) * df(j, q);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int q = 0; q < m; ++q)
            if (c(q, k, l) != 0.0) mixed += f(l) * df(k, j) * S(c(q, k, l)) * df(j, q);
  }
};

}  // namespace detail

/// h F̂_h for Lie-Euler, pseudo-divergence-free of third order:
///   h f + h²/2 Df f - h³/3 Df Df f - h³/12 (f^k ⟦E_j,E_k⟧_J[f^j]) f
///   - h³/12 tr(Df Df) f + h³/6 [f, Df f].
template <class S>
Vec<S> preprocessed_euler_field(const FramedField<S>& field, const Mat<S>& y, S h) {
  const auto& c = field.basis().structure();
  detail::Derived<S> d(field, y);
  const S h2 = h * h, h3 = h2 * h;
  Vec<S> out = h * d.f + h2 / S(2) * d.dff - h3 / S(3) * d.dfdff - h3 / S(12) * d.torsion * d.f - h3 / S(12) * d.trace2 * d.f +
               h3 / S(6) * c.template bracket<S>(d.f, d.dff);
  return out;
}

/// h F̂_h for the three-stage √5 method, pseudo-divergence-free of fourth
/// order as published: h f plus four h³ and seven h⁴ terms.
template <class S>
Vec<S> preprocessed_lrk_field(const FramedField<S>& field, const Mat<S>& y, S h) {
  using std::sqrt;
  const auto& c = field.basis().structure();
  detail::Derived<S> d(field, y);
  const S r5 = sqrt(S(5));
  const S h3 = h * h * h, h4 = h3 * h;
  const Vec<S> fdff = c.template bracket<S>(d.f, d.dff);

  Vec<S> t3 = -d.dfdff / S(12) + (S(1) - r5) / S(24) * d.torsion * d.f + (S(1) - r5) / S(24) * d.trace2 * d.f +
              (S(1) + r5) / S(24) * fdff;
  Vec<S> t4 = d.df * d.dfdff / S(8) - d.df * fdff / S(12) + d.nested / S(36) * d.f + d.mixed / S(12) * d.f +
              d.trace3 / S(18) * d.f - c.template bracket<S>(d.f, d.dfdff) / S(12) + c.template bracket<S>(d.f, fdff) / S(18);

  return h * d.f + h3 * t3 + h4 * t4;
}

/// Lie-Euler preprocessor whose h³ terms cancel the method's own h² volume
/// residue including the composition cross term ½(f ▷ Df f + Df f ▷ f):
///   h f + h²/2 Df f + h³/6 Df Df f + h³/6 (torsion + tr(Df Df)) f
///   - h³/12 [f, Df f].
template <class S>
Vec<S> corrected_euler_field(const FramedField<S>& field, const Mat<S>& y, S h) {
  const auto& c = field.basis().structure();
  detail::Derived<S> d(field, y);
  const S h2 = h * h, h3 = h2 * h;
  return h * d.f + h2 / S(2) * d.dff + h3 / S(6) * d.dfdff + h3 / S(6) * (d.torsion + d.trace2) * d.f -
         h3 / S(12) * c.template bracket<S>(d.f, d.dff);
}

/// √5-method preprocessor with the cherry weight ½Σ b_i c_i² - 1/6 of the
/// method's modified field; same first-derivative terms as the published one.
template <class S>
Vec<S> corrected_lrk_field(const FramedField<S>& field, const Mat<S>& y, S h) {
  using std::sqrt;
  const auto& c = field.basis().structure();
  detail::Derived<S> d(field, y);
  const S r5 = sqrt(S(5));
  const S h3 = h * h * h, h4 = h3 * h;
  const Vec<S> fdff = c.template bracket<S>(d.f, d.dff);
  const S k = (S(8) - S(3) * r5) / S(432);

  Vec<S> t3 = -d.dfdff / S(12) + (S(5) - r5) / S(48) * (d.torsion + d.trace2) * d.f + (r5 - S(1)) / S(48) * fdff;
  Vec<S> t4 = d.df * d.dfdff / S(8) - c.template bracket<S>(d.f, d.dfdff) / S(24) - k * c.template bracket<S>(d.f, fdff) +
              (d.trace3 / S(36) + k * d.nested - d.mixed / S(24)) * d.f;

  return h * d.f + h3 * t3 + h4 * t4;
}

enum class Preprocessor { Euler3, Lrk4, Euler3Corrected, Lrk4Corrected };

/// A preprocessed vector field bound to its base field and step size; its
/// coefficients are h F̂_h / h, evaluated afresh at every point.
template <class S>
struct PreprocessedField {
  const FramedField<S>* base;
  Preprocessor scheme;
  S h;

  Vec<S> operator()(const Mat<S>& y) const {
    switch (scheme) {
      case Preprocessor::Euler3: return Vec<S>(preprocessed_euler_field(*base, y, h) / h);
      case Preprocessor::Lrk4: return Vec<S>(preprocessed_lrk_field(*base, y, h) / h);
      case Preprocessor::Euler3Corrected: return Vec<S>(corrected_euler_field(*base, y, h) / h);
      case Preprocessor::Lrk4Corrected: return Vec<S>(corrected_lrk_field(*base, y, h) / h);
    }
    throw DomainError("unknown preprocessor");
  }
};

}  // namespace patree::numeric

#include "patree/numeric/elementary.hpp"

#include "patree/divergence.hpp"
#include "patree/expr_io.hpp"

#include <cmath>

namespace patree::numeric {

namespace {

class Evaluator {
 public:
  Evaluator(const FramedField<double>& field, const Mat<double>& y)
      : f_(field), y_(y), m_(field.size()), c_(field.basis().structure()) {}

  /// Tree value; a crossed edge evaluates to E_crossed (crossed >= 0).
  Vec<double> tree(const Tree& t, int crossed = -1) const {
    if (t.kind() == Tree::Kind::FreeEdge) throw DomainError("cannot evaluate a free edge");
    if (t.kind() == Tree::Kind::CrossedEdge) {
      if (crossed < 0) throw DomainError("crossed edge outside an aroma");
      Vec<double> e = Vec<double>::Zero(m_);
      e(crossed) = 1.0;
      return e;
    }
    if (!t.decoration().label.empty()) throw DomainError("decorated vertices have no elementary differential");
    std::vector<Vec<double>> kids;
    for (const auto& child : t.children()) kids.push_back(tree(child, crossed));
    Vec<double> out = Vec<double>::Zero(m_);
    std::vector<int> idx(kids.size(), 0);
    // Σ over multi-indices of Π kids[k](idx[k]) · E_idx[0] ... E_idx[p-1] f.
    for (;;) {
      double w = 1.0;
      for (std::size_t k = 0; k < kids.size() && w != 0.0; ++k) w *= kids[k](idx[k]);
      if (w != 0.0) out += w * f_.derivative(y_, idx);
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == m_) idx[k++] = 0;
      if (k == idx.size()) break;
    }
    return out;
  }

  Vec<double> word(const LieWord& w) const {
    if (w.is_leaf()) return tree(w.tree());
    return c_.bracket<double>(word(w.left()), word(w.right()));
  }

  double aroma(const Aroma& a) const {
    Mat<double> prod = Mat<double>::Identity(m_, m_);
    for (const auto& entry : a.entries()) {
      Mat<double> u(m_, m_);
      for (int c = 0; c < m_; ++c) u.col(c) = tree(entry, c);
      prod = prod * u;
    }
    return prod.trace();
  }

  double aromas(const MultiAroma& ma) const {
    double s = 1.0;
    for (const auto& a : ma.factors()) s *= aroma(a);
    return s;
  }

  int size() const { return m_; }

 private:
  const FramedField<double>& f_;
  const Mat<double>& y_;
  int m_;
  const StructureConstants& c_;
};

}  // namespace

Evaluation elementary_differential(const Element& t, const FramedField<double>& field, const Mat<double>& y,
                                   double h) {
  Evaluator ev(field, y);
  Evaluation out{Vec<double>::Zero(ev.size()), 0.0};
  for (const auto& [key, entry] : t) {
    if (entry.term.free_edge_count() > 0) throw DomainError("cannot evaluate a term with a free edge");
    double w = static_cast<double>(entry.coeff) * std::pow(h, entry.term.order()) * ev.aromas(entry.term.aromas);
    if (entry.term.word)
      out.vector += w * ev.word(*entry.term.word);
    else
      out.scalar += w;
  }
  return out;
}

Vec<double> evaluate_vector(const Element& t, const FramedField<double>& field, const Mat<double>& y, double h) {
  for (const auto& [key, entry] : t)
    if (!entry.term.word) throw DomainError("expected a vector-valued element");
  return elementary_differential(t, field, y, h).vector;
}

double evaluate_scalar(const Element& t, const FramedField<double>& field, const Mat<double>& y, double h) {
  for (const auto& [key, entry] : t)
    if (entry.term.word) throw DomainError("expected a pure multi-aroma");
  return elementary_differential(t, field, y, h).scalar;
}

double morphism_defect(const Element& t, const FramedField<double>& field, const Mat<double>& y, double eps) {
  double lhs = evaluate_scalar(div(t), field, y);
  auto g = [&](const Mat<double>& z) { return evaluate_vector(t, field, z); };
  return std::abs(lhs - divergence_fd(g, field.basis(), y, eps));
}

std::vector<Element> degeneracy_patterns() {
  return {parse_element("A[(x -> o)]"), parse_element("A[(o x -> o)]"), parse_element("A[(o o x -> o)]"),
          parse_element("A[((o -> o) x -> o)]")};
}

std::vector<DegeneracyRow> degeneracy_check(const FramedField<double>& field, std::span<const Mat<double>> points,
                                            const std::vector<Element>& patterns) {
  std::vector<DegeneracyRow> rows;
  for (const auto& p : patterns) {
    DegeneracyRow row{to_string(p), 0.0};
    for (const auto& y : points) row.max_abs = std::max(row.max_abs, std::abs(evaluate_scalar(p, field, y)));
    rows.push_back(row);
  }
  return rows;
}

double reduction_rhs(const Vec<double>& g, const FramedField<double>& field, const Mat<double>& y) {
  const auto& c = field.basis().structure();
  const int m = field.size();
  Mat<double> df = field.jacobian(y);
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int a = 0; a < m; ++a)
      for (int k = 0; k < m; ++k) s += g(a) * c(k, i, a) * df(i, k);
  return s;
}

}  // namespace patree::numeric

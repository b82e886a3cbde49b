#pragma once

#include "patree/element.hpp"
#include "patree/numeric/framed_field.hpp"

namespace patree::numeric {

/// Value of F^F on an element: a tangent vector in the frame for Lie terms,
/// a scalar for pure multi-aromas. Mixed elements fill both parts.
struct Evaluation {
  Vec<double> vector;
  double scalar = 0.0;
};

/// F^F(t)(y), each term scaled by h^order (F^{hF}). Vertices act by frozen
/// frame derivatives with the leftmost child outermost; brackets use the
/// structure constants; an aroma (e1, ..., en) is tr(U1 ... Un) with
/// U(i, c) the i-th component of the entry evaluated with its crossed edge
/// set to E_c. Throws DomainError for terms with a free edge or
/// decorations, NumericError when the field lacks the derivative order.
Evaluation elementary_differential(const Element& t, const FramedField<double>& field, const Mat<double>& y,
                                   double h = 1.0);

/// Vector part; throws DomainError if a term is a pure multi-aroma.
Vec<double> evaluate_vector(const Element& t, const FramedField<double>& field, const Mat<double>& y,
                            double h = 1.0);

/// Scalar part; throws DomainError if a term carries a Lie word.
double evaluate_scalar(const Element& t, const FramedField<double>& field, const Mat<double>& y, double h = 1.0);

/// |F^F(Div t)(y) - Div(F^F(t))(y)| with the right side by central
/// differences of step eps.
double morphism_defect(const Element& t, const FramedField<double>& field, const Mat<double>& y,
                       double eps = 1e-5);

/// Aromas that vanish for divergence-free fields: the crossed edge sits
/// rightmost among the root's children, (t1 ... tp x -> o).
std::vector<Element> degeneracy_patterns();

struct DegeneracyRow {
  std::string pattern;
  double max_abs = 0.0;
};

/// max_y |F^F(pattern)(y)| over the given points for every pattern.
std::vector<DegeneracyRow> degeneracy_check(const FramedField<double>& field, std::span<const Mat<double>> points,
                                            const std::vector<Element>& patterns = degeneracy_patterns());

/// Right side of the reduction of A[(x t -> o)] for divergence-free fields,
/// with the components of g = F^F(t) frozen at y:
/// g^a c^k_{ia} E_k[f^i].
double reduction_rhs(const Vec<double>& g, const FramedField<double>& field, const Mat<double>& y);

}  // namespace patree::numeric

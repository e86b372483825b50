#ifndef TDI_OPERATORS_HPP
#define TDI_OPERATORS_HPP

#include "tdi/multiindex.hpp"
#include "tdi/polynomial.hpp"

namespace tdi {

enum class OperatorMode { derivative, difference };

/// p(x + y), expanded exactly.
Polynomial translate(const Polynomial& p, const Point& y);

/// p(lambda . x) with the componentwise product; coefficient c_a picks up the
/// factor lambda^a.
Polynomial dilate(const Polynomial& p, const Point& lambda);

/// p(a . x + b), i.e. dilate(translate(p, b), a).
Polynomial affine_map(const Polynomial& p, const Point& a, const Point& b);

/// Iterated partial derivative.
Polynomial partial(const Polynomial& p, const MultiIndex& a);

/// Iterated forward difference with unit increments per axis.
Polynomial difference(const Polynomial& p, const MultiIndex& a);

/// Sum over the support of `op` of c_a times the a-fold derivative or
/// difference of p; the zero operator maps everything to zero.
Polynomial apply_operator(const Polynomial& op, const Polynomial& p, OperatorMode mode);

/// a -> (d^a p)(0); equals a! times the coefficient of x^a, zeros omitted.
std::map<MultiIndex, Rational, TermOrder> taylor_coefficients(const Polynomial& p);

} // namespace tdi

#endif

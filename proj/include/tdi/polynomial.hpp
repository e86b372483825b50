#ifndef TDI_POLYNOMIAL_HPP
#define TDI_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdi/multiindex.hpp"
#include "tdi/rational.hpp"

namespace tdi {

/// Point of Q^d; the dimension d >= 1 is fixed at construction.
class Point {
public:
    explicit Point(std::vector<Rational> coordinates);

    static Point zero(std::size_t d);
    static Point ones(std::size_t d);

    std::size_t dimension() const { return coordinates_.size(); }
    const Rational& operator[](std::size_t i) const { return coordinates_[i]; }
    const std::vector<Rational>& coordinates() const { return coordinates_; }

    friend bool operator==(const Point& a, const Point& b) {
        return a.coordinates_ == b.coordinates_;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }

private:
    std::vector<Rational> coordinates_;
};

Point operator+(const Point& a, const Point& b);
/// Componentwise product.
Point hadamard(const Point& a, const Point& b);

/// Sparse polynomial over Q with a fixed ambient dimension d >= 1. Stored
/// coefficients are never zero; the zero polynomial has an empty term map.
/// Terms iterate in the canonical printing order (degree descending, then
/// x1-major descending).
class Polynomial {
public:
    using TermMap = std::map<MultiIndex, Rational, TermOrder>;

    /// Zero polynomial of dimension d.
    explicit Polynomial(std::size_t d);

    /// x^a with coefficient 1 (0^0 = 1 makes the zero index the constant 1).
    static Polynomial monomial(const MultiIndex& a);
    static Polynomial constant(std::size_t d, const Rational& value);

    std::size_t dimension() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// 0 for indices outside the support.
    Rational coefficient(const MultiIndex& a) const;
    /// Support in term order (degree descending).
    std::vector<MultiIndex> support() const;
    std::optional<std::uint64_t> total_degree() const;
    /// Largest exponent of x_axis (1-based axis); 0 for the zero polynomial.
    std::uint32_t degree_in(std::size_t axis) const;
    /// Leading term under the canonical order; requires a nonzero polynomial.
    const MultiIndex& leading_monomial() const;

    /// Adds c * x^a, dropping the term if the sum cancels.
    void add_term(const MultiIndex& a, const Rational& c);

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.d_ == b.d_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    std::size_t d_;
    TermMap terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Rational& c, const Polynomial& p);
Polynomial mul(const Polynomial& p, const Polynomial& q);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
Polynomial operator-(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p);
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
inline Polynomial operator*(const Rational& c, const Polynomial& p) { return scale(c, p); }

Rational eval(const Polynomial& p, const Point& pt);

/// x^a evaluated at pt, with 0^0 = 1.
Rational power(const Point& pt, const MultiIndex& a);

/// Unique polynomial supported in `allowed_support` matching the given point
/// values. Requires at least |allowed_support| pairwise distinct points.
/// Throws SingularSystem when the evaluation matrix has deficient column
/// rank, Inconsistent when no supported polynomial matches the values.
Polynomial fit_from_values(const std::vector<Point>& points, const std::vector<Rational>& values,
                           const std::vector<MultiIndex>& allowed_support);
Polynomial fit_from_values(const std::vector<Point>& points, const std::vector<Rational>& values,
                           const std::vector<MultiIndex>& allowed_support, std::size_t d);

/// Canonical text form: terms in degree-descending order, coefficient 1
/// suppressed except on the constant term, sign folded into the separator,
/// variables always spelled x1..xd. The zero polynomial prints as "0".
std::string format(const Polynomial& p);

/// Parses the polynomial grammar. Variables are x1..xd; x, y, z alias x1, x2,
/// x3. The dimension is the largest variable index seen, at least
/// max(min_dimension, 1). Throws ParseError with a 1-based position.
Polynomial parse_polynomial(const std::string& text, std::size_t min_dimension = 0);

} // namespace tdi

#endif

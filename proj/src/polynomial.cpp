#include "tdi/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "tdi/errors.hpp"

namespace tdi {

Point::Point(std::vector<Rational> coordinates) : coordinates_(std::move(coordinates)) {
    if (coordinates_.empty()) {
        throw std::invalid_argument("Point: dimension must be at least 1");
    }
}

Point Point::zero(std::size_t d) { return Point(std::vector<Rational>(d, Rational(0))); }

Point Point::ones(std::size_t d) { return Point(std::vector<Rational>(d, Rational(1))); }

Point operator+(const Point& a, const Point& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "Point addition");
    std::vector<Rational> c(a.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return Point(std::move(c));
}

Point hadamard(const Point& a, const Point& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "Point product");
    std::vector<Rational> c(a.dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] * b[i];
    return Point(std::move(c));
}

Polynomial::Polynomial(std::size_t d) : d_(d) {
    if (d == 0) {
        throw std::invalid_argument("Polynomial: dimension must be at least 1");
    }
}

Polynomial Polynomial::monomial(const MultiIndex& a) {
    Polynomial p(a.dimension());
    p.terms_.emplace(a, Rational(1));
    return p;
}

Polynomial Polynomial::constant(std::size_t d, const Rational& value) {
    Polynomial p(d);
    if (value != 0) p.terms_.emplace(MultiIndex::zero(d), value);
    return p;
}

Rational Polynomial::coefficient(const MultiIndex& a) const {
    detail::require_same_dimension(a.dimension(), d_, "Polynomial::coefficient");
    const auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<MultiIndex> Polynomial::support() const {
    std::vector<MultiIndex> s;
    s.reserve(terms_.size());
    for (const auto& [a, c] : terms_) s.push_back(a);
    return s;
}

std::optional<std::uint64_t> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // The term order leads with the highest degree.
    return terms_.begin()->first.degree();
}

std::uint32_t Polynomial::degree_in(std::size_t axis) const {
    if (axis < 1 || axis > d_) throw std::invalid_argument("Polynomial::degree_in: bad axis");
    std::uint32_t best = 0;
    for (const auto& [a, c] : terms_) best = std::max(best, a[axis - 1]);
    return best;
}

const MultiIndex& Polynomial::leading_monomial() const {
    if (terms_.empty()) {
        throw std::logic_error("Polynomial::leading_monomial: zero polynomial");
    }
    return terms_.begin()->first;
}

void Polynomial::add_term(const MultiIndex& a, const Rational& c) {
    detail::require_same_dimension(a.dimension(), d_, "Polynomial::add_term");
    if (c == 0) return;
    const auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
    detail::require_same_dimension(p.dimension(), q.dimension(), "Polynomial addition");
    Polynomial r = p;
    for (const auto& [a, c] : q.terms()) r.add_term(a, c);
    return r;
}

Polynomial scale(const Rational& c, const Polynomial& p) {
    Polynomial r(p.dimension());
    if (c == 0) return r;
    for (const auto& [a, v] : p.terms()) r.add_term(a, c * v);
    return r;
}

Polynomial mul(const Polynomial& p, const Polynomial& q) {
    detail::require_same_dimension(p.dimension(), q.dimension(), "Polynomial multiplication");
    Polynomial r(p.dimension());
    for (const auto& [a, ca] : p.terms()) {
        for (const auto& [b, cb] : q.terms()) {
            r.add_term(a + b, ca * cb);
        }
    }
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return add(p, scale(Rational(-1), q)); }

Polynomial operator-(const Polynomial& p) { return scale(Rational(-1), p); }

Rational power(const Point& pt, const MultiIndex& a) {
    detail::require_same_dimension(pt.dimension(), a.dimension(), "power");
    Rational result(1);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (a[i] != 0) result *= rational_pow(pt[i], a[i]);
    }
    return result;
}

Rational eval(const Polynomial& p, const Point& pt) {
    detail::require_same_dimension(p.dimension(), pt.dimension(), "eval");
    Rational sum(0);
    for (const auto& [a, c] : p.terms()) sum += c * power(pt, a);
    return sum;
}

Polynomial fit_from_values(const std::vector<Point>& points, const std::vector<Rational>& values,
                           const std::vector<MultiIndex>& allowed_support) {
    std::size_t d = 0;
    if (!allowed_support.empty()) {
        d = allowed_support.front().dimension();
    } else if (!points.empty()) {
        d = points.front().dimension();
    } else {
        throw std::invalid_argument("fit_from_values: cannot infer dimension from empty input");
    }
    return fit_from_values(points, values, allowed_support, d);
}

Polynomial fit_from_values(const std::vector<Point>& points, const std::vector<Rational>& values,
                           const std::vector<MultiIndex>& allowed_support, std::size_t d) {
    if (points.size() != values.size()) {
        throw std::invalid_argument("fit_from_values: point and value counts differ");
    }
    for (const Point& pt : points) {
        detail::require_same_dimension(pt.dimension(), d, "fit_from_values");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i] == points[j]) {
                throw std::invalid_argument("fit_from_values: points must be pairwise distinct");
            }
        }
    }

    // Columns in term order, duplicates collapsed.
    std::vector<MultiIndex> columns;
    for (const MultiIndex& a : allowed_support) {
        detail::require_same_dimension(a.dimension(), d, "fit_from_values");
        if (std::find(columns.begin(), columns.end(), a) == columns.end()) columns.push_back(a);
    }
    std::sort(columns.begin(), columns.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return TermOrder{}(a, b); });
    if (points.size() < columns.size()) {
        throw std::invalid_argument("fit_from_values: fewer points than support elements");
    }

    const std::size_t rows = points.size();
    const std::size_t cols = columns.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = power(points[i], columns[j]);
        m[i][cols] = values[i];
    }

    // Gauss-Jordan; the pivot is the first not-yet-used row with a nonzero
    // entry in the column, which fixes the result for a given input order.
    std::vector<bool> used(rows, false);
    std::vector<std::size_t> pivot_row(cols, rows);
    for (std::size_t j = 0; j < cols; ++j) {
        std::size_t pivot = rows;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!used[i] && m[i][j] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        used[pivot] = true;
        pivot_row[j] = pivot;
        const Rational pivot_value = m[pivot][j];
        for (std::size_t k = j; k <= cols; ++k) m[pivot][k] /= pivot_value;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pivot || m[i][j] == 0) continue;
            const Rational factor = m[i][j];
            for (std::size_t k = j; k <= cols; ++k) m[i][k] -= factor * m[pivot][k];
        }
    }

    for (std::size_t j = 0; j < cols; ++j) {
        if (pivot_row[j] == rows) {
            throw SingularSystem("fit_from_values: evaluation matrix is rank-deficient");
        }
    }
    for (std::size_t i = 0; i < rows; ++i) {
        if (!used[i] && m[i][cols] != 0) {
            throw Inconsistent("fit_from_values: values are not realizable over the allowed support");
        }
    }

    Polynomial result(d);
    for (std::size_t j = 0; j < cols; ++j) result.add_term(columns[j], m[pivot_row[j]][cols]);
    return result;
}

} // namespace tdi

#include "tdi/spaces.hpp"

#include <algorithm>
#include <set>

#include "tdi/errors.hpp"
#include "tdi/operators.hpp"

namespace tdi {

PolySpace::PolySpace(std::size_t d) : d_(d) {
    if (d == 0) {
        throw std::invalid_argument("PolySpace: dimension must be at least 1");
    }
}

bool PolySpace::contains(const Polynomial& p) const {
    detail::require_same_dimension(p.dimension(), d_, "PolySpace::contains");
    Polynomial remainder = p;
    for (const Polynomial& row : rows_) {
        const Rational c = remainder.coefficient(row.leading_monomial());
        if (c != 0) remainder = remainder - scale(c, row);
    }
    return remainder.is_zero();
}

SpanBuilder::SpanBuilder(std::size_t d) : d_(d) {
    if (d == 0) {
        throw std::invalid_argument("SpanBuilder: dimension must be at least 1");
    }
}

Polynomial SpanBuilder::reduce(const Polynomial& p) const {
    Polynomial remainder = p;
    for (const Polynomial& row : rows_) {
        const Rational c = remainder.coefficient(row.leading_monomial());
        if (c != 0) remainder = remainder - scale(c, row);
    }
    return remainder;
}

bool SpanBuilder::insert(const Polynomial& p) {
    detail::require_same_dimension(p.dimension(), d_, "SpanBuilder::insert");
    Polynomial remainder = reduce(p);
    if (remainder.is_zero()) return false;

    const Rational lead = remainder.coefficient(remainder.leading_monomial());
    remainder = scale(Rational(1) / lead, remainder);
    // Clear the new leading monomial from the existing rows, then keep the
    // rows sorted by decreasing leading monomial.
    for (Polynomial& row : rows_) {
        const Rational c = row.coefficient(remainder.leading_monomial());
        if (c != 0) row = row - scale(c, remainder);
    }
    const auto at = std::upper_bound(rows_.begin(), rows_.end(), remainder,
                                     [](const Polynomial& a, const Polynomial& b) {
                                         return TermOrder{}(a.leading_monomial(), b.leading_monomial());
                                     });
    rows_.insert(at, std::move(remainder));
    return true;
}

bool SpanBuilder::contains(const Polynomial& p) const {
    detail::require_same_dimension(p.dimension(), d_, "SpanBuilder::contains");
    return reduce(p).is_zero();
}

PolySpace SpanBuilder::to_space() const {
    PolySpace v(d_);
    v.rows_ = rows_;
    return v;
}

PolySpace span_basis(const std::vector<Polynomial>& generators, std::size_t d) {
    SpanBuilder builder(d);
    for (const Polynomial& g : generators) builder.insert(g);
    return builder.to_space();
}

bool space_contains(const PolySpace& v, const Polynomial& p) { return v.contains(p); }

bool monomial_rank_check(const std::vector<MultiIndex>& s, std::size_t d) {
    std::set<MultiIndex, EnumerationOrder> distinct(s.begin(), s.end());
    std::vector<Polynomial> monomials;
    monomials.reserve(distinct.size());
    for (const MultiIndex& a : distinct) {
        detail::require_same_dimension(a.dimension(), d, "monomial_rank_check");
        monomials.push_back(Polynomial::monomial(a));
    }
    return span_basis(monomials, d).dimension() == distinct.size();
}

PolySpace tau_orbit(const Polynomial& p) {
    SpanBuilder builder(p.dimension());
    // Derivative indices live in the componentwise degree box of p; higher
    // ones annihilate p.
    std::vector<std::uint32_t> box(p.dimension(), 0);
    for (std::size_t axis = 0; axis < p.dimension(); ++axis) box[axis] = p.degree_in(axis + 1);
    std::vector<std::uint32_t> current(p.dimension(), 0);
    while (true) {
        builder.insert(partial(p, MultiIndex(std::vector<std::uint32_t>(current))));
        std::size_t axis = 0;
        while (axis < current.size() && current[axis] == box[axis]) {
            current[axis] = 0;
            ++axis;
        }
        if (axis == current.size()) break;
        ++current[axis];
    }
    return builder.to_space();
}

PolySpace sigma_orbit(const Polynomial& p) {
    SpanBuilder builder(p.dimension());
    for (const auto& [a, c] : p.terms()) builder.insert(Polynomial::monomial(a));
    return builder.to_space();
}

LowerSet tausigma_orbit(const Polynomial& p) {
    return downward_closure(p.support(), p.dimension());
}

std::vector<MultiIndex> omega_of_space(const PolySpace& v) {
    std::vector<std::uint32_t> box(v.ambient_dimension(), 0);
    for (const Polynomial& row : v.basis()) {
        for (std::size_t axis = 0; axis < box.size(); ++axis) {
            box[axis] = std::max(box[axis], row.degree_in(axis + 1));
        }
    }
    std::vector<MultiIndex> out;
    if (v.dimension() == 0) return out;
    std::vector<std::uint32_t> current(box.size(), 0);
    while (true) {
        MultiIndex a{std::vector<std::uint32_t>(current)};
        if (v.contains(Polynomial::monomial(a))) out.push_back(std::move(a));
        std::size_t axis = 0;
        while (axis < current.size() && current[axis] == box[axis]) {
            current[axis] = 0;
            ++axis;
        }
        if (axis == current.size()) break;
        ++current[axis];
    }
    std::sort(out.begin(), out.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return EnumerationOrder{}(a, b); });
    return out;
}

bool is_translation_invariant(const PolySpace& v) {
    for (const Polynomial& row : v.basis()) {
        for (std::size_t axis = 0; axis < v.ambient_dimension(); ++axis) {
            if (!v.contains(partial(row, MultiIndex::unit(v.ambient_dimension(), axis)))) {
                return false;
            }
        }
    }
    return true;
}

bool is_dilation_invariant(const PolySpace& v) {
    for (const Polynomial& row : v.basis()) {
        for (const auto& [a, c] : row.terms()) {
            if (!v.contains(Polynomial::monomial(a))) return false;
        }
    }
    return true;
}

LowerSet tdi_closure(const std::vector<Polynomial>& generators, std::size_t d) {
    LowerSet result = LowerSet::empty(d);
    for (const Polynomial& g : generators) {
        detail::require_same_dimension(g.dimension(), d, "tdi_closure");
        result = unite(result, tausigma_orbit(g));
    }
    return result;
}

MembershipResult lowerset_member(const Polynomial& p, const LowerSet& omega) {
    detail::require_same_dimension(p.dimension(), omega.dimension(), "lowerset_member");
    std::vector<MultiIndex> violations;
    for (const auto& [a, c] : p.terms()) {
        if (!omega.contains(a)) violations.push_back(a);
    }
    MembershipResult result;
    result.member = violations.empty();
    if (!result.member) {
        result.witness = *std::min_element(
            violations.begin(), violations.end(),
            [](const MultiIndex& a, const MultiIndex& b) { return EnumerationOrder{}(a, b); });
    }
    return result;
}

} // namespace tdi

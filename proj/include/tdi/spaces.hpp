#ifndef TDI_SPACES_HPP
#define TDI_SPACES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tdi/multiindex.hpp"
#include "tdi/polynomial.hpp"

namespace tdi {

/// Finite-dimensional subspace of polynomials held as a reduced basis: each
/// row is monic in its leading monomial, no row's leading monomial occurs in
/// any other row, and rows are sorted by decreasing leading monomial. Two
/// PolySpaces are equal iff they have the same reduced rows, which happens
/// iff they span the same subspace.
class PolySpace {
public:
    /// Zero space of ambient dimension d.
    explicit PolySpace(std::size_t d);

    std::size_t ambient_dimension() const { return d_; }
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<Polynomial>& basis() const { return rows_; }

    bool contains(const Polynomial& p) const;

    friend bool operator==(const PolySpace& a, const PolySpace& b) {
        return a.d_ == b.d_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const PolySpace& a, const PolySpace& b) { return !(a == b); }

private:
    friend class SpanBuilder;
    std::size_t d_;
    std::vector<Polynomial> rows_;
};

/// Incrementally row-reduces inserted polynomials, maintaining the reduced
/// basis invariant of PolySpace.
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t d);

    /// Returns true when the span grew.
    bool insert(const Polynomial& p);
    bool contains(const Polynomial& p) const;
    std::size_t dimension() const { return rows_.size(); }
    const std::vector<Polynomial>& basis() const { return rows_; }
    PolySpace to_space() const;

private:
    /// Remainder of p after eliminating every row's leading monomial.
    Polynomial reduce(const Polynomial& p) const;

    std::size_t d_;
    std::vector<Polynomial> rows_;
};

PolySpace span_basis(const std::vector<Polynomial>& generators, std::size_t d);
bool space_contains(const PolySpace& v, const Polynomial& p);

/// Monomials over a finite index set are independent: the span dimension
/// equals the number of distinct indices.
bool monomial_rank_check(const std::vector<MultiIndex>& s, std::size_t d);

/// Smallest translation-invariant space containing p: the span of all
/// partial derivatives of p.
PolySpace tau_orbit(const Polynomial& p);

/// Smallest dilation-invariant space containing p: the span of the support
/// monomials; its dimension is |support(p)|.
PolySpace sigma_orbit(const Polynomial& p);

/// Smallest translation- and dilation-invariant space containing p, as the
/// staircase of its monomial basis: the downward closure of support(p).
LowerSet tausigma_orbit(const Polynomial& p);

/// Indices a with x^a in V, scanned over the componentwise degree box of V's
/// basis; enumeration order.
std::vector<MultiIndex> omega_of_space(const PolySpace& v);

bool is_translation_invariant(const PolySpace& v);
bool is_dilation_invariant(const PolySpace& v);

/// Staircase of the smallest TDI space containing all generators.
LowerSet tdi_closure(const std::vector<Polynomial>& generators, std::size_t d);

struct MembershipResult {
    bool member = false;
    /// Present iff member is false: the first violating support index in
    /// enumeration order.
    std::optional<MultiIndex> witness;
};

/// Whether support(p) lies inside omega.
MembershipResult lowerset_member(const Polynomial& p, const LowerSet& omega);

} // namespace tdi

#endif

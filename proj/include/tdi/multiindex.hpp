#ifndef TDI_MULTIINDEX_HPP
#define TDI_MULTIINDEX_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tdi/rational.hpp"

namespace tdi {

/// Exponent vector in N^d; the dimension d >= 1 is fixed at construction.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<std::uint32_t> entries);

    static MultiIndex zero(std::size_t d);
    /// Unit vector e_axis, axis 0-based.
    static MultiIndex unit(std::size_t d, std::size_t axis);

    std::size_t dimension() const { return entries_.size(); }
    std::uint32_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint32_t>& entries() const { return entries_; }

    /// Total order |alpha| = sum of entries.
    std::uint64_t degree() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

private:
    std::vector<std::uint32_t> entries_;
};

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
/// Componentwise difference; requires leq(b, a).
MultiIndex subtract(const MultiIndex& a, const MultiIndex& b);
/// Componentwise partial order.
bool leq(const MultiIndex& a, const MultiIndex& b);
/// alpha! as a product of componentwise factorials.
Integer factorial(const MultiIndex& a);

/// x1-major lexicographic comparison: -1, 0 or 1.
int lex_compare(const MultiIndex& a, const MultiIndex& b);

/// Term order used for printing and basis reduction: higher degree first,
/// inside a degree x1-major descending (x1^2*x2 before x2^3).
struct TermOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Order used when enumerating index sets: degree ascending, inside a degree
/// x1-major descending ((1,0) before (0,1)).
struct EnumerationOrder {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// "(2,1)" rendering used in diagnostics and witness output.
std::string to_string(const MultiIndex& a);

/// Element of N union {infinity}; infinity is an explicit state, never a
/// stand-in integer, and compares strictly above every natural.
class ExtNat {
public:
    ExtNat() : ExtNat(std::uint32_t{0}) {}
    explicit ExtNat(std::uint32_t value) : infinite_(false), value_(value) {}

    static ExtNat infinity();

    bool is_infinite() const { return infinite_; }
    /// Requires a finite value.
    std::uint32_t finite_value() const;

    friend bool operator==(ExtNat a, ExtNat b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend bool operator!=(ExtNat a, ExtNat b) { return !(a == b); }

private:
    bool infinite_;
    std::uint32_t value_;
};

/// -1, 0 or 1 with infinity greatest.
int ext_compare(ExtNat a, ExtNat b);
bool ext_leq(ExtNat a, ExtNat b);
bool ext_leq(std::uint32_t a, ExtNat b);

/// Corner point in (N union {infinity})^d.
class ExtendedMultiIndex {
public:
    explicit ExtendedMultiIndex(std::vector<ExtNat> entries);

    /// Lift of a finite multi-index.
    explicit ExtendedMultiIndex(const MultiIndex& a);

    std::size_t dimension() const { return entries_.size(); }
    ExtNat operator[](std::size_t i) const { return entries_[i]; }
    bool has_infinite_entry() const;

    friend bool operator==(const ExtendedMultiIndex& a, const ExtendedMultiIndex& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExtendedMultiIndex& a, const ExtendedMultiIndex& b) {
        return !(a == b);
    }

private:
    std::vector<ExtNat> entries_;
};

bool ext_leq(const MultiIndex& a, const ExtendedMultiIndex& b);
bool ext_leq(const ExtendedMultiIndex& a, const ExtendedMultiIndex& b);

/// Downward-closed subset of N^d, stored as a finite union of initial
/// sections [n_k]. The generator list is normalized: no generator dominates
/// another, and generators are sorted canonically (finite degrees ascending
/// before infinite ones, ties x1-major descending with infinity greatest).
/// No generators means the empty set.
class LowerSet {
public:
    LowerSet(std::size_t d, std::vector<ExtendedMultiIndex> generators);

    static LowerSet empty(std::size_t d);
    /// All of N^d (single all-infinity generator).
    static LowerSet full(std::size_t d);

    std::size_t dimension() const { return d_; }
    const std::vector<ExtendedMultiIndex>& generators() const { return generators_; }
    bool is_empty() const { return generators_.empty(); }

    bool contains(const MultiIndex& a) const;

    friend bool operator==(const LowerSet& a, const LowerSet& b) {
        return a.d_ == b.d_ && a.generators_ == b.generators_;
    }
    friend bool operator!=(const LowerSet& a, const LowerSet& b) { return !(a == b); }

private:
    std::size_t d_;
    std::vector<ExtendedMultiIndex> generators_;
};

/// Smallest LowerSet containing S; generators are the maximal elements of S.
LowerSet downward_closure(const std::vector<MultiIndex>& s, std::size_t d);

LowerSet unite(const LowerSet& a, const LowerSet& b);

/// {beta : beta_axis <= bound}; axis is 1-based.
LowerSet slab(std::size_t axis, std::uint32_t bound, std::size_t d);

/// Union of slab(k, a_k - 1) over axes with a_k >= 1. Requires a outside
/// omega; the result then contains omega and still excludes a.
LowerSet enveloping_slabs(const LowerSet& omega, const MultiIndex& a);

/// {beta in omega : |beta| <= degree_bound} in enumeration order.
std::vector<MultiIndex> truncate(const LowerSet& omega, std::uint32_t degree_bound);

/// Minimal elements of the complement of omega, in enumeration order. Every
/// index outside omega dominates one of them; the result is an antichain.
std::vector<MultiIndex> minimal_outside(const LowerSet& omega);

} // namespace tdi

#endif

#include "tdi/multiindex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tdi/errors.hpp"

namespace tdi {

MultiIndex::MultiIndex(std::vector<std::uint32_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("MultiIndex: dimension must be at least 1");
    }
}

MultiIndex MultiIndex::zero(std::size_t d) {
    return MultiIndex(std::vector<std::uint32_t>(d, 0));
}

MultiIndex MultiIndex::unit(std::size_t d, std::size_t axis) {
    std::vector<std::uint32_t> e(d, 0);
    e.at(axis) = 1;
    return MultiIndex(std::move(e));
}

std::uint64_t MultiIndex::degree() const {
    std::uint64_t sum = 0;
    for (std::uint32_t v : entries_) sum += v;
    return sum;
}

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "MultiIndex addition");
    std::vector<std::uint32_t> e(a.dimension());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] + b[i];
    return MultiIndex(std::move(e));
}

MultiIndex subtract(const MultiIndex& a, const MultiIndex& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "MultiIndex subtraction");
    if (!leq(b, a)) {
        throw std::invalid_argument("MultiIndex subtraction: subtrahend not componentwise below");
    }
    std::vector<std::uint32_t> e(a.dimension());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
    return MultiIndex(std::move(e));
}

bool leq(const MultiIndex& a, const MultiIndex& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "leq");
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Integer factorial(const MultiIndex& a) {
    Integer result = 1;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        result *= integer_factorial(a[i]);
    }
    return result;
}

int lex_compare(const MultiIndex& a, const MultiIndex& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "lex_compare");
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

bool TermOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const std::uint64_t da = a.degree();
    const std::uint64_t db = b.degree();
    if (da != db) return da > db;
    return lex_compare(a, b) > 0;
}

bool EnumerationOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
    const std::uint64_t da = a.degree();
    const std::uint64_t db = b.degree();
    if (da != db) return da < db;
    return lex_compare(a, b) > 0;
}

std::string to_string(const MultiIndex& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(a[i]);
    }
    out += ')';
    return out;
}

ExtNat ExtNat::infinity() {
    ExtNat n;
    n.infinite_ = true;
    n.value_ = 0;
    return n;
}

std::uint32_t ExtNat::finite_value() const {
    if (infinite_) {
        throw std::logic_error("ExtNat: finite_value on infinity");
    }
    return value_;
}

int ext_compare(ExtNat a, ExtNat b) {
    if (a.is_infinite() && b.is_infinite()) return 0;
    if (a.is_infinite()) return 1;
    if (b.is_infinite()) return -1;
    const std::uint32_t va = a.finite_value();
    const std::uint32_t vb = b.finite_value();
    if (va == vb) return 0;
    return va < vb ? -1 : 1;
}

bool ext_leq(ExtNat a, ExtNat b) { return ext_compare(a, b) <= 0; }

bool ext_leq(std::uint32_t a, ExtNat b) { return b.is_infinite() || a <= b.finite_value(); }

ExtendedMultiIndex::ExtendedMultiIndex(std::vector<ExtNat> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw std::invalid_argument("ExtendedMultiIndex: dimension must be at least 1");
    }
}

ExtendedMultiIndex::ExtendedMultiIndex(const MultiIndex& a) {
    entries_.reserve(a.dimension());
    for (std::size_t i = 0; i < a.dimension(); ++i) entries_.emplace_back(a[i]);
}

bool ExtendedMultiIndex::has_infinite_entry() const {
    for (const ExtNat& e : entries_) {
        if (e.is_infinite()) return true;
    }
    return false;
}

bool ext_leq(const MultiIndex& a, const ExtendedMultiIndex& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "ext_leq");
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (!ext_leq(a[i], b[i])) return false;
    }
    return true;
}

bool ext_leq(const ExtendedMultiIndex& a, const ExtendedMultiIndex& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "ext_leq");
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (!ext_leq(a[i], b[i])) return false;
    }
    return true;
}

namespace {

/// Canonical generator order: finite total degree before infinite, finite
/// degrees ascending, ties x1-major with greater entries first.
bool generator_before(const ExtendedMultiIndex& a, const ExtendedMultiIndex& b) {
    const bool ia = a.has_infinite_entry();
    const bool ib = b.has_infinite_entry();
    if (ia != ib) return !ia;
    if (!ia) {
        std::uint64_t da = 0;
        std::uint64_t db = 0;
        for (std::size_t i = 0; i < a.dimension(); ++i) da += a[i].finite_value();
        for (std::size_t i = 0; i < b.dimension(); ++i) db += b[i].finite_value();
        if (da != db) return da < db;
    }
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        const int c = ext_compare(a[i], b[i]);
        if (c != 0) return c > 0;
    }
    return false;
}

std::vector<ExtendedMultiIndex> normalize_generators(std::vector<ExtendedMultiIndex> generators) {
    std::vector<ExtendedMultiIndex> kept;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < generators.size() && !dominated; ++j) {
            if (i == j) continue;
            if (!ext_leq(generators[i], generators[j])) continue;
            // Of two equal generators keep the first occurrence only.
            dominated = !(generators[j] == generators[i]) || j < i;
        }
        if (!dominated) kept.push_back(generators[i]);
    }
    std::sort(kept.begin(), kept.end(), generator_before);
    return kept;
}

/// All indices of total degree `degree`, x1-major descending.
void compositions_descending(std::uint32_t degree, std::size_t axis, std::vector<std::uint32_t>& current,
                             std::vector<MultiIndex>& out) {
    if (axis + 1 == current.size()) {
        current[axis] = degree;
        out.push_back(MultiIndex(current));
        return;
    }
    for (std::uint32_t v = degree;; --v) {
        current[axis] = v;
        compositions_descending(degree - v, axis + 1, current, out);
        if (v == 0) break;
    }
}

} // namespace

LowerSet::LowerSet(std::size_t d, std::vector<ExtendedMultiIndex> generators) : d_(d) {
    if (d == 0) {
        throw std::invalid_argument("LowerSet: dimension must be at least 1");
    }
    for (const ExtendedMultiIndex& g : generators) {
        detail::require_same_dimension(g.dimension(), d, "LowerSet");
    }
    generators_ = normalize_generators(std::move(generators));
}

LowerSet LowerSet::empty(std::size_t d) { return LowerSet(d, {}); }

LowerSet LowerSet::full(std::size_t d) {
    return LowerSet(d, {ExtendedMultiIndex(std::vector<ExtNat>(d, ExtNat::infinity()))});
}

bool LowerSet::contains(const MultiIndex& a) const {
    detail::require_same_dimension(a.dimension(), d_, "LowerSet::contains");
    for (const ExtendedMultiIndex& g : generators_) {
        if (ext_leq(a, g)) return true;
    }
    return false;
}

LowerSet downward_closure(const std::vector<MultiIndex>& s, std::size_t d) {
    std::vector<ExtendedMultiIndex> generators;
    generators.reserve(s.size());
    for (const MultiIndex& a : s) {
        detail::require_same_dimension(a.dimension(), d, "downward_closure");
        generators.push_back(ExtendedMultiIndex(a));
    }
    return LowerSet(d, std::move(generators));
}

LowerSet unite(const LowerSet& a, const LowerSet& b) {
    detail::require_same_dimension(a.dimension(), b.dimension(), "unite");
    std::vector<ExtendedMultiIndex> generators = a.generators();
    generators.insert(generators.end(), b.generators().begin(), b.generators().end());
    return LowerSet(a.dimension(), std::move(generators));
}

LowerSet slab(std::size_t axis, std::uint32_t bound, std::size_t d) {
    if (axis < 1 || axis > d) {
        throw std::invalid_argument("slab: axis out of range");
    }
    std::vector<ExtNat> corner(d, ExtNat::infinity());
    corner[axis - 1] = ExtNat(bound);
    return LowerSet(d, {ExtendedMultiIndex(std::move(corner))});
}

LowerSet enveloping_slabs(const LowerSet& omega, const MultiIndex& a) {
    detail::require_same_dimension(a.dimension(), omega.dimension(), "enveloping_slabs");
    if (omega.contains(a)) {
        throw std::invalid_argument("enveloping_slabs: point lies inside the lower set");
    }
    LowerSet result = LowerSet::empty(omega.dimension());
    for (std::size_t k = 0; k < a.dimension(); ++k) {
        if (a[k] >= 1) {
            result = unite(result, slab(k + 1, a[k] - 1, omega.dimension()));
        }
    }
    return result;
}

std::vector<MultiIndex> truncate(const LowerSet& omega, std::uint32_t degree_bound) {
    std::vector<MultiIndex> out;
    std::vector<std::uint32_t> current(omega.dimension(), 0);
    for (std::uint32_t n = 0; n <= degree_bound; ++n) {
        std::vector<MultiIndex> layer;
        compositions_descending(n, 0, current, layer);
        for (const MultiIndex& a : layer) {
            if (omega.contains(a)) out.push_back(a);
        }
    }
    return out;
}

std::vector<MultiIndex> minimal_outside(const LowerSet& omega) {
    const std::size_t d = omega.dimension();
    // A minimal element of the complement has, on every axis, either 0 or a
    // finite generator entry plus one.
    std::vector<std::set<std::uint32_t>> axis_candidates(d);
    for (std::size_t i = 0; i < d; ++i) {
        axis_candidates[i].insert(0);
        for (const ExtendedMultiIndex& g : omega.generators()) {
            if (!g[i].is_infinite()) axis_candidates[i].insert(g[i].finite_value() + 1);
        }
    }

    std::vector<MultiIndex> outside;
    std::vector<std::uint32_t> current(d, 0);
    const auto scan = [&](auto&& self, std::size_t axis) -> void {
        if (axis == d) {
            MultiIndex a{std::vector<std::uint32_t>(current)};
            if (!omega.contains(a)) outside.push_back(std::move(a));
            return;
        }
        for (std::uint32_t v : axis_candidates[axis]) {
            current[axis] = v;
            self(self, axis + 1);
        }
    };
    scan(scan, 0);

    std::vector<MultiIndex> minimal;
    for (const MultiIndex& a : outside) {
        bool is_minimal = true;
        for (const MultiIndex& b : outside) {
            if (!(b == a) && leq(b, a)) {
                is_minimal = false;
                break;
            }
        }
        if (is_minimal) minimal.push_back(a);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const MultiIndex& a, const MultiIndex& b) { return EnumerationOrder{}(a, b); });
    return minimal;
}

} // namespace tdi

#include <cctype>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "tdi/errors.hpp"
#include "tdi/polynomial.hpp"

namespace tdi {

namespace {

constexpr std::uint32_t kMaxExponent = 1000000;

struct Cursor {
    const std::string& text;
    std::size_t i = 0;

    bool done() const { return i >= text.size(); }
    char peek() const { return text[i]; }
    /// 1-based position for diagnostics.
    std::size_t position() const { return i + 1; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    }
};

[[noreturn]] void fail(const Cursor& c, const std::string& message) {
    throw ParseError(message, c.position());
}

bool at_digit(const Cursor& c) { return !c.done() && std::isdigit(static_cast<unsigned char>(c.peek())); }

std::string read_digits(Cursor& c) {
    if (!at_digit(c)) fail(c, "expected digits");
    std::string out;
    while (at_digit(c)) out += c.text[c.i++];
    return out;
}

std::uint32_t read_bounded_nat(Cursor& c, const char* what) {
    const std::size_t start = c.position();
    const std::string digits = read_digits(c);
    if (digits.size() > 7) throw ParseError(std::string(what) + " too large", start);
    const unsigned long value = std::stoul(digits);
    if (value > kMaxExponent) throw ParseError(std::string(what) + " too large", start);
    return static_cast<std::uint32_t>(value);
}

/// One variable factor: x, y, z, or xN, optionally ^nat. Returns
/// (0-based variable index, exponent).
std::pair<std::size_t, std::uint32_t> read_var_factor(Cursor& c) {
    const char v = c.peek();
    std::size_t index = 0;
    ++c.i;
    if (v == 'y') {
        index = 1;
    } else if (v == 'z') {
        index = 2;
    } else if (at_digit(c)) {
        const std::size_t start = c.position();
        const std::uint32_t n = read_bounded_nat(c, "variable index");
        if (n == 0) throw ParseError("variable index must be at least 1", start);
        index = n - 1;
    }
    std::uint32_t exponent = 1;
    c.skip_ws();
    if (!c.done() && c.peek() == '^') {
        ++c.i;
        c.skip_ws();
        exponent = read_bounded_nat(c, "exponent");
    }
    return {index, exponent};
}

bool at_var(const Cursor& c) {
    if (c.done()) return false;
    const char v = c.peek();
    return v == 'x' || v == 'y' || v == 'z';
}

struct RawTerm {
    Rational coefficient;
    std::vector<std::pair<std::size_t, std::uint32_t>> factors;
};

/// coeff := int ('/' posint)?
Rational read_coefficient(Cursor& c) {
    bool negative = false;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        negative = c.peek() == '-';
        ++c.i;
        c.skip_ws();
    }
    std::string numerator = read_digits(c);
    std::string denominator = "1";
    if (!c.done() && c.peek() == '/') {
        ++c.i;
        c.skip_ws();
        const std::size_t start = c.position();
        denominator = read_digits(c);
        if (Integer(denominator) == 0) throw ParseError("zero denominator", start);
    }
    Rational value = make_rational(Integer(numerator), Integer(denominator));
    return negative ? Rational(-value) : value;
}

/// term := coeff ('*' mono)? | mono, where an explicit sign has already been
/// folded into `negative`.
RawTerm read_term(Cursor& c, bool negative) {
    RawTerm term;
    term.coefficient = Rational(1);
    if (!at_var(c)) {
        if (c.done() || (!at_digit(c) && c.peek() != '+' && c.peek() != '-')) {
            fail(c, "expected a term");
        }
        term.coefficient = read_coefficient(c);
        c.skip_ws();
        bool expect_mono = false;
        if (!c.done() && c.peek() == '*') {
            ++c.i;
            c.skip_ws();
            expect_mono = true;
        }
        if (!at_var(c)) {
            if (expect_mono) fail(c, "expected a variable");
            if (negative) term.coefficient = -term.coefficient;
            return term;
        }
    }
    while (true) {
        term.factors.push_back(read_var_factor(c));
        c.skip_ws();
        if (c.done() || c.peek() != '*') break;
        ++c.i;
        c.skip_ws();
        if (!at_var(c)) fail(c, "expected a variable");
    }
    if (negative) term.coefficient = -term.coefficient;
    return term;
}

} // namespace

Polynomial parse_polynomial(const std::string& text, std::size_t min_dimension) {
    Cursor c{text};
    c.skip_ws();
    if (c.done()) fail(c, "empty polynomial");

    std::vector<RawTerm> terms;
    bool negative = false;
    if (c.peek() == '+' || c.peek() == '-') {
        negative = c.peek() == '-';
        ++c.i;
        c.skip_ws();
    }
    terms.push_back(read_term(c, negative));
    c.skip_ws();
    while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        negative = c.peek() == '-';
        ++c.i;
        c.skip_ws();
        terms.push_back(read_term(c, negative));
        c.skip_ws();
    }
    if (!c.done()) fail(c, "unexpected character");

    std::size_t d = min_dimension > 0 ? min_dimension : 1;
    for (const RawTerm& t : terms) {
        for (const auto& [index, exponent] : t.factors) d = std::max(d, index + 1);
    }

    Polynomial p(d);
    for (const RawTerm& t : terms) {
        std::vector<std::uint32_t> exponents(d, 0);
        for (const auto& [index, exponent] : t.factors) {
            const std::uint64_t sum = std::uint64_t{exponents[index]} + exponent;
            if (sum > kMaxExponent) throw ParseError("exponent too large", 1);
            exponents[index] = static_cast<std::uint32_t>(sum);
        }
        p.add_term(MultiIndex(std::move(exponents)), t.coefficient);
    }
    return p;
}

namespace {

std::string format_monomial(const MultiIndex& a) {
    std::string out;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(i + 1);
        if (a[i] > 1) {
            out += '^';
            out += std::to_string(a[i]);
        }
    }
    return out;
}

} // namespace

std::string format(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Rational magnitude = rational_abs(c);
        const std::string mono = format_monomial(a);
        if (mono.empty()) {
            out += rational_to_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += rational_to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

} // namespace tdi

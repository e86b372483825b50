#include "tdi/operators.hpp"

#include "tdi/errors.hpp"

namespace tdi {

namespace {

/// Calls fn on every index beta <= bound.
template <typename Fn>
void for_each_below(const MultiIndex& bound, Fn&& fn) {
    std::vector<std::uint32_t> current(bound.dimension(), 0);
    while (true) {
        fn(MultiIndex(std::vector<std::uint32_t>(current)));
        std::size_t axis = 0;
        while (axis < current.size() && current[axis] == bound[axis]) {
            current[axis] = 0;
            ++axis;
        }
        if (axis == current.size()) return;
        ++current[axis];
    }
}

/// Product of binomial(a_i, b_i); requires b <= a.
Rational binomial_product(const MultiIndex& a, const MultiIndex& b) {
    Rational result(1);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        result *= Rational(integer_binomial(a[i], b[i]));
    }
    return result;
}

/// Falling factorial a_i * (a_i - 1) * ... over the step b; zero when b !<= a.
Integer falling_factorial(const MultiIndex& a, const MultiIndex& b) {
    Integer result = 1;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        if (b[i] > a[i]) return Integer(0);
        for (std::uint32_t step = 0; step < b[i]; ++step) {
            result *= Integer(a[i] - step);
        }
    }
    return result;
}

} // namespace

Polynomial translate(const Polynomial& p, const Point& y) {
    detail::require_same_dimension(p.dimension(), y.dimension(), "translate");
    Polynomial result(p.dimension());
    for (const auto& [a, c] : p.terms()) {
        // (x + y)^a expands over all beta <= a with binomial weights.
        for_each_below(a, [&](const MultiIndex& beta) {
            const MultiIndex rest = subtract(a, beta);
            result.add_term(beta, c * binomial_product(a, beta) * power(y, rest));
        });
    }
    return result;
}

Polynomial dilate(const Polynomial& p, const Point& lambda) {
    detail::require_same_dimension(p.dimension(), lambda.dimension(), "dilate");
    Polynomial result(p.dimension());
    for (const auto& [a, c] : p.terms()) {
        result.add_term(a, c * power(lambda, a));
    }
    return result;
}

Polynomial affine_map(const Polynomial& p, const Point& a, const Point& b) {
    return dilate(translate(p, b), a);
}

Polynomial partial(const Polynomial& p, const MultiIndex& a) {
    detail::require_same_dimension(p.dimension(), a.dimension(), "partial");
    Polynomial result(p.dimension());
    for (const auto& [beta, c] : p.terms()) {
        const Integer factor = falling_factorial(beta, a);
        if (factor == 0) continue;
        result.add_term(subtract(beta, a), c * Rational(factor));
    }
    return result;
}

Polynomial difference(const Polynomial& p, const MultiIndex& a) {
    detail::require_same_dimension(p.dimension(), a.dimension(), "difference");
    Polynomial result = p;
    for (std::size_t axis = 0; axis < a.dimension(); ++axis) {
        if (a[axis] == 0) continue;
        std::vector<Rational> step(p.dimension(), Rational(0));
        step[axis] = Rational(1);
        const Point increment{std::move(step)};
        for (std::uint32_t count = 0; count < a[axis]; ++count) {
            result = translate(result, increment) - result;
        }
    }
    return result;
}

Polynomial apply_operator(const Polynomial& op, const Polynomial& p, OperatorMode mode) {
    detail::require_same_dimension(op.dimension(), p.dimension(), "apply_operator");
    Polynomial result(p.dimension());
    for (const auto& [a, c] : op.terms()) {
        const Polynomial applied = mode == OperatorMode::derivative ? partial(p, a) : difference(p, a);
        result = result + scale(c, applied);
    }
    return result;
}

std::map<MultiIndex, Rational, TermOrder> taylor_coefficients(const Polynomial& p) {
    std::map<MultiIndex, Rational, TermOrder> out;
    for (const auto& [a, c] : p.terms()) {
        out.emplace(a, c * Rational(factorial(a)));
    }
    return out;
}

} // namespace tdi

#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "tdi/harness.hpp"
#include "tdi/operators.hpp"
#include "tdi/polynomial.hpp"
#include "tdi/rng.hpp"

using namespace tdi;

namespace {

MultiIndex mi(std::vector<std::uint32_t> v) { return MultiIndex(std::move(v)); }

Point pt(std::vector<Rational> v) { return Point(std::move(v)); }

Polynomial poly(const std::string& text, std::size_t d = 0) { return parse_polynomial(text, d); }

Polynomial rand_poly(SplitMix64& rng, std::size_t d) {
    return random_polynomial_stream(rng, d, 3, 9, nullptr);
}

/// All multi-indices componentwise below `box`, inclusive.
std::vector<MultiIndex> degree_box(const std::vector<std::uint32_t>& box) {
    std::vector<MultiIndex> out;
    std::vector<std::uint32_t> current(box.size(), 0);
    while (true) {
        out.push_back(MultiIndex(current));
        std::size_t i = 0;
        while (i < box.size()) {
            if (current[i] < box[i]) {
                ++current[i];
                break;
            }
            current[i] = 0;
            ++i;
        }
        if (i == box.size()) break;
    }
    return out;
}

std::vector<std::uint32_t> degree_profile(const Polynomial& p) {
    std::vector<std::uint32_t> box(p.dimension(), 0);
    for (std::size_t axis = 0; axis < p.dimension(); ++axis)
        box[axis] = p.degree_in(axis + 1);
    return box;
}

} // namespace

TEST_CASE("translate") {
    CHECK(translate(poly("x^3"), pt({1})) == poly("x^3 + 3*x^2 + 3*x + 1"));
    CHECK(translate(poly("x1*x2"), pt({1, 0})) == poly("x1*x2 + x2"));
    const Polynomial p = poly("x1^2*x2 - 1/2*x2^3 + 1");
    CHECK(translate(p, Point::zero(2)) == p);
    CHECK_THROWS_AS(translate(poly("x1"), pt({1, 2})), std::invalid_argument);
}

TEST_CASE("dilate") {
    CHECK(dilate(poly("x^2 + x"), pt({2})) == poly("4*x^2 + 2*x"));
    const Polynomial p = poly("x1^2*x2 - 1/2*x2^3 + 1");
    CHECK(dilate(p, Point::ones(2)) == p);
    CHECK(dilate(p, Point::zero(2)) == Polynomial::constant(2, 1));
}

TEST_CASE("affine map") {
    CHECK(affine_map(poly("x"), pt({2}), pt({3})) == poly("2*x + 3"));
    const Polynomial p = poly("x1^3*x2 - x2");
    CHECK(affine_map(p, Point::ones(2), Point::zero(2)) == p);
    CHECK(affine_map(poly("x^2"), pt({2}), pt({1})) == poly("4*x^2 + 4*x + 1"));
    SplitMix64 rng(41);
    for (int t = 0; t < 20; ++t) {
        const std::size_t d = 1 + t % 3;
        const Polynomial q = rand_poly(rng, d);
        const Point a = random_point(rng, d, 5);
        const Point b = random_point(rng, d, 5);
        CHECK(affine_map(q, a, b) == dilate(translate(q, b), a));
    }
}

TEST_CASE("partial") {
    CHECK(partial(poly("x1^2*x2"), mi({1, 0})) == poly("2*x1*x2"));
    CHECK(partial(poly("x^2"), mi({3})).is_zero());
    const Polynomial p = poly("x1^2*x2 - 1/2*x2^3 + 1");
    CHECK(partial(p, MultiIndex::zero(2)) == p);
    CHECK(partial(poly("x1^2*x2 - 1/2*x2^3 + 1"), mi({1, 1})) == poly("2*x1", 2));
}

TEST_CASE("difference") {
    CHECK(difference(poly("x^2"), mi({1})) == poly("2*x + 1"));
    CHECK(difference(poly("x1*x2"), mi({1, 1})) == Polynomial::constant(2, 1));
    CHECK(difference(Polynomial::constant(2, Rational(7)), mi({1, 0})).is_zero());
    CHECK(difference(poly("x^3"), mi({1})) == poly("3*x^2 + 3*x + 1"));
}

TEST_CASE("apply operator") {
    CHECK(apply_operator(poly("x^2 + 1"), poly("x^3"), OperatorMode::derivative) ==
          poly("x^3 + 6*x"));
    CHECK(apply_operator(poly("x"), poly("x^2"), OperatorMode::difference) == poly("2*x + 1"));
    const Polynomial p = poly("x1^3*x2 - x2");
    CHECK(apply_operator(Polynomial::constant(2, 1), p, OperatorMode::derivative) == p);
    CHECK(apply_operator(Polynomial::constant(2, 1), p, OperatorMode::difference) == p);
    CHECK(apply_operator(Polynomial(1), poly("x^5"), OperatorMode::derivative).is_zero());
}

TEST_CASE("taylor coefficients") {
    const auto one_var = taylor_coefficients(poly("x^2"));
    CHECK(one_var.size() == 1);
    CHECK(one_var.at(mi({2})) == 2);

    const auto two_var = taylor_coefficients(poly("x1*x2 + 3"));
    CHECK(two_var.size() == 2);
    CHECK(two_var.at(mi({1, 1})) == 1);
    CHECK(two_var.at(mi({0, 0})) == 3);

    CHECK(taylor_coefficients(Polynomial(2)).empty());
}

TEST_CASE("group laws") {
    SplitMix64 rng(43);
    for (int t = 0; t < 25; ++t) {
        const std::size_t d = 1 + t % 3;
        const Polynomial p = rand_poly(rng, d);
        const Point y = random_point(rng, d, 9);
        const Point z = random_point(rng, d, 9);
        CHECK(translate(translate(p, y), z) == translate(p, y + z));
        CHECK(dilate(dilate(p, y), z) == dilate(p, hadamard(y, z)));
    }
}

TEST_CASE("translation satisfies the Taylor expansion identity") {
    SplitMix64 rng(47);
    for (int t = 0; t < 25; ++t) {
        const std::size_t d = 1 + t % 3;
        const Polynomial p = rand_poly(rng, d);
        const Point y = random_point(rng, d, 9);
        Polynomial sum(d);
        for (const MultiIndex& a : degree_box(degree_profile(p))) {
            const Rational weight = power(y, a) / Rational(factorial(a));
            sum = sum + weight * partial(p, a);
        }
        CHECK(sum == translate(p, y));
    }
}

TEST_CASE("dilation satisfies the Taylor expansion identity") {
    SplitMix64 rng(53);
    for (int t = 0; t < 25; ++t) {
        const std::size_t d = 1 + t % 3;
        const Polynomial p = rand_poly(rng, d);
        const Point lambda = random_point(rng, d, 9);
        const auto coefficients = taylor_coefficients(p);
        Polynomial sum(d);
        for (const auto& [a, value] : coefficients) {
            const Rational weight = power(lambda, a) * value / Rational(factorial(a));
            sum = sum + weight * Polynomial::monomial(a);
        }
        CHECK(sum == dilate(p, lambda));
    }
}

TEST_CASE("difference laws") {
    SplitMix64 rng(59);
    for (int t = 0; t < 15; ++t) {
        const std::size_t d = 1 + t % 3;
        const Polynomial p = rand_poly(rng, d);
        std::vector<std::uint32_t> av(d), bv(d);
        for (auto& e : av) e = static_cast<std::uint32_t>(rng.below(3));
        for (auto& e : bv) e = static_cast<std::uint32_t>(rng.below(3));
        const MultiIndex a(av), b(bv);
        CHECK(difference(p, a + b) == difference(difference(p, a), b));
        CHECK(difference(difference(p, a), b) == difference(difference(p, b), a));
    }
    // Delta^alpha applied to its own monomial is alpha factorial.
    for (const MultiIndex& a : degree_box({3, 3})) {
        CHECK(difference(Polynomial::monomial(a), a) ==
              Polynomial::constant(2, Rational(factorial(a))));
    }
    // Differencing past the per-axis degree kills the polynomial.
    CHECK(difference(poly("x1^2*x2 + x1"), mi({3, 0})).is_zero());
    CHECK(difference(poly("x1^2*x2 + x1"), mi({0, 2})).is_zero());
}

TEST_CASE("operators agree with pointwise semantics") {
    SplitMix64 rng(61);
    for (int t = 0; t < 25; ++t) {
        const std::size_t d = 1 + t % 3;
        const Polynomial p = rand_poly(rng, d);
        const Point y = random_point(rng, d, 9);
        const Point x = random_point(rng, d, 9);
        CHECK(eval(translate(p, y), x) == eval(p, x + y));
        CHECK(eval(dilate(p, y), x) == eval(p, hadamard(y, x)));
    }
}

TEST_CASE("partial and difference strictly decrease degree") {
    SplitMix64 rng(67);
    int seen = 0;
    while (seen < 25) {
        const std::size_t d = 1 + rng.below(3);
        const Polynomial p = rand_poly(rng, d);
        if (!p.total_degree() || *p.total_degree() == 0) continue;
        std::vector<std::uint32_t> av(d, 0);
        av[rng.below(d)] = 1 + static_cast<std::uint32_t>(rng.below(2));
        const MultiIndex a(av);
        for (const Polynomial& image : {partial(p, a), difference(p, a)}) {
            if (!image.is_zero()) CHECK(*image.total_degree() < *p.total_degree());
        }
        ++seen;
    }
}

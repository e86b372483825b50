#include "tdi/harness.hpp"

#include <algorithm>
#include <stdexcept>

#include "tdi/errors.hpp"
#include "tdi/operators.hpp"

namespace tdi {

namespace {

void validate(const TrialConfig& cfg) {
    if (cfg.trials < 1) throw std::invalid_argument("TrialConfig: trials must be at least 1");
    if (cfg.dimension < 1) throw std::invalid_argument("TrialConfig: dimension must be at least 1");
    if (cfg.degree_bound < 0) throw std::invalid_argument("TrialConfig: degree_bound must be nonnegative");
    if (cfg.coefficient_height < 1) {
        throw std::invalid_argument("TrialConfig: coefficient_height must be at least 1");
    }
}

/// Oracle sampling batch size used by the randomized suites.
constexpr int kSuiteBatch = 6;

TrialConfig population_config(const SuiteConfig& cfg, int t) {
    if (cfg.count < 1) throw std::invalid_argument("SuiteConfig: count must be at least 1");
    TrialConfig trial;
    trial.seed = cfg.seed + kSplitMixGamma * (static_cast<std::uint64_t>(t) + 1);
    trial.trials = kSuiteBatch;
    trial.dimension = cfg.fixed_dimension > 0 ? cfg.fixed_dimension : (t % 3) + 1;
    trial.degree_bound = cfg.degree_bound;
    trial.coefficient_height = cfg.coefficient_height;
    return trial;
}

} // namespace

Point random_point(SplitMix64& rng, std::size_t d, std::uint32_t height) {
    std::vector<Rational> coordinates;
    coordinates.reserve(d);
    for (std::size_t i = 0; i < d; ++i) coordinates.push_back(random_nonzero_rational(rng, height));
    return Point(std::move(coordinates));
}

Polynomial random_polynomial_stream(SplitMix64& rng, std::size_t d, int degree_bound,
                                    std::uint32_t height, const LowerSet* omega) {
    const LowerSet candidates_from = omega ? *omega : LowerSet::full(d);
    detail::require_same_dimension(candidates_from.dimension(), d, "random_polynomial_stream");
    const std::vector<MultiIndex> candidates =
        truncate(candidates_from, static_cast<std::uint32_t>(degree_bound));
    Polynomial p(d);
    for (const MultiIndex& a : candidates) {
        if (rng.coin()) p.add_term(a, random_nonzero_rational(rng, height));
    }
    return p;
}

Polynomial random_polynomial(const TrialConfig& cfg) {
    validate(cfg);
    SplitMix64 rng(cfg.seed);
    return random_polynomial_stream(rng, static_cast<std::size_t>(cfg.dimension), cfg.degree_bound,
                                    cfg.coefficient_height, nullptr);
}

Polynomial random_polynomial(const TrialConfig& cfg, const LowerSet& omega) {
    validate(cfg);
    SplitMix64 rng(cfg.seed);
    return random_polynomial_stream(rng, static_cast<std::size_t>(cfg.dimension), cfg.degree_bound,
                                    cfg.coefficient_height, &omega);
}

namespace {

/// Runs the double-batch stabilization rule: sample() consumes one per-trial
/// seed and inserts into the builder; stop after two consecutive batches
/// without dimension growth.
template <typename Sample>
void stabilize(SpanBuilder& builder, const TrialConfig& cfg, Sample&& sample) {
    std::uint64_t trial = 0;
    int stale_batches = 0;
    while (stale_batches < 2) {
        const std::size_t before = builder.dimension();
        for (int i = 0; i < cfg.trials; ++i, ++trial) {
            SplitMix64 rng(cfg.seed + trial);
            sample(rng);
        }
        stale_batches = builder.dimension() == before ? stale_batches + 1 : 0;
    }
}

} // namespace

PolySpace oracle_tau(const Polynomial& p, const TrialConfig& cfg) {
    validate(cfg);
    SpanBuilder builder(p.dimension());
    stabilize(builder, cfg, [&](SplitMix64& rng) {
        builder.insert(translate(p, random_point(rng, p.dimension(), cfg.coefficient_height)));
    });
    return builder.to_space();
}

PolySpace oracle_sigma(const Polynomial& p, const TrialConfig& cfg) {
    validate(cfg);
    SpanBuilder builder(p.dimension());
    stabilize(builder, cfg, [&](SplitMix64& rng) {
        builder.insert(dilate(p, random_point(rng, p.dimension(), cfg.coefficient_height)));
    });
    return builder.to_space();
}

PolySpace oracle_tausigma(const Polynomial& p, const TrialConfig& cfg) {
    validate(cfg);
    SpanBuilder builder(p.dimension());
    builder.insert(p);
    std::uint64_t trial = 0;
    int stale_rounds = 0;
    while (stale_rounds < 2) {
        const std::size_t before = builder.dimension();
        const std::vector<Polynomial> basis = builder.basis();
        for (const Polynomial& row : basis) {
            for (int i = 0; i < cfg.trials; ++i, ++trial) {
                SplitMix64 rng(cfg.seed + trial);
                builder.insert(translate(row, random_point(rng, p.dimension(), cfg.coefficient_height)));
            }
            for (int i = 0; i < cfg.trials; ++i, ++trial) {
                SplitMix64 rng(cfg.seed + trial);
                builder.insert(dilate(row, random_point(rng, p.dimension(), cfg.coefficient_height)));
            }
        }
        stale_rounds = builder.dimension() == before ? stale_rounds + 1 : 0;
    }
    return builder.to_space();
}

std::pair<Polynomial, std::vector<bool>> delta_power(const Polynomial& p, const MultiIndex& n) {
    detail::require_same_dimension(p.dimension(), n.dimension(), "delta_power");
    Polynomial result = difference(p, n);
    std::vector<bool> divisible(p.dimension(), true);
    for (const auto& [a, c] : result.terms()) {
        for (std::size_t axis = 0; axis < p.dimension(); ++axis) {
            if (a[axis] == 0) divisible[axis] = false;
        }
    }
    return {std::move(result), std::move(divisible)};
}

Verdict check_closure(const LowerSet& omega, const std::vector<Polynomial>& sequence,
                      const Polynomial& limit, const std::vector<Point>& grid,
                      const Rational& tolerance) {
    const std::size_t d = omega.dimension();
    detail::require_same_dimension(limit.dimension(), d, "check_closure");
    for (const Point& x : grid) detail::require_same_dimension(x.dimension(), d, "check_closure");
    if (sequence.empty()) throw std::invalid_argument("check_closure: empty sequence");
    if (grid.empty()) throw std::invalid_argument("check_closure: empty grid");
    if (tolerance < 0) throw std::invalid_argument("check_closure: negative tolerance");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            if (grid[i] == grid[j]) {
                throw std::invalid_argument("check_closure: grid points must be pairwise distinct");
            }
        }
    }
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        detail::require_same_dimension(sequence[i].dimension(), d, "check_closure");
        if (!lowerset_member(sequence[i], omega).member) {
            throw SequenceNotInSpace(i, "check_closure: sequence element " + std::to_string(i) +
                                            " has support outside the staircase");
        }
    }

    Verdict verdict;
    for (const Polynomial& element : sequence) {
        Rational worst(0);
        for (const Point& x : grid) {
            worst = std::max(worst, rational_abs(eval(element, x) - eval(limit, x)));
        }
        verdict.max_residuals.push_back(std::move(worst));
    }
    verdict.final_within_tolerance = verdict.max_residuals.back() <= tolerance;

    const MembershipResult membership = lowerset_member(limit, omega);
    verdict.member = membership.member;
    if (!membership.member) {
        verdict.witness = membership.witness;
        verdict.enveloping = enveloping_slabs(omega, *membership.witness);
    }
    return verdict;
}

Polynomial limit_fit(const std::vector<std::pair<Point, Rational>>& value_table,
                     const LowerSet& omega, std::uint32_t degree_bound) {
    std::vector<Point> points;
    std::vector<Rational> values;
    points.reserve(value_table.size());
    values.reserve(value_table.size());
    for (const auto& [point, value] : value_table) {
        points.push_back(point);
        values.push_back(value);
    }
    return fit_from_values(points, values, truncate(omega, degree_bound), omega.dimension());
}

namespace {

PolySpace monomial_span(const LowerSet& omega, std::uint32_t degree_bound) {
    SpanBuilder builder(omega.dimension());
    for (const MultiIndex& a : truncate(omega, degree_bound)) {
        builder.insert(Polynomial::monomial(a));
    }
    return builder.to_space();
}

template <typename Case>
SuiteReport run_randomized_suite(const SuiteConfig& cfg, Case&& run_case) {
    SuiteReport report;
    for (int t = 0; t < cfg.count; ++t) {
        const TrialConfig trial = population_config(cfg, t);
        if (run_case(trial)) {
            ++report.pass;
        } else {
            ++report.fail;
            report.notes.push_back("case " + std::to_string(t) + " (seed " +
                                   std::to_string(trial.seed) + ", d " +
                                   std::to_string(trial.dimension) + ") failed");
        }
    }
    return report;
}

} // namespace

SuiteReport suite_translation_oracle(const SuiteConfig& cfg) {
    return run_randomized_suite(cfg, [](const TrialConfig& trial) {
        const Polynomial p = random_polynomial(trial);
        return tau_orbit(p) == oracle_tau(p, trial);
    });
}

SuiteReport suite_dilation_oracle(const SuiteConfig& cfg) {
    return run_randomized_suite(cfg, [](const TrialConfig& trial) {
        const Polynomial p = random_polynomial(trial);
        const PolySpace orbit = sigma_orbit(p);
        return orbit == oracle_sigma(p, trial) && orbit.dimension() == p.terms().size();
    });
}

SuiteReport suite_monomial_closure_oracle(const SuiteConfig& cfg) {
    return run_randomized_suite(cfg, [](const TrialConfig& trial) {
        const Polynomial p = random_polynomial(trial);
        const std::uint32_t degree =
            static_cast<std::uint32_t>(p.total_degree().value_or(0));
        return monomial_span(tausigma_orbit(p), degree) == oracle_tausigma(p, trial);
    });
}

SuiteReport suite_taylor_identity(const SuiteConfig& cfg) {
    return run_randomized_suite(cfg, [](const TrialConfig& trial) {
        SplitMix64 rng(trial.seed);
        const std::size_t d = static_cast<std::size_t>(trial.dimension);
        const Polynomial p =
            random_polynomial_stream(rng, d, trial.degree_bound, trial.coefficient_height, nullptr);
        const Point y = random_point(rng, d, trial.coefficient_height);

        Polynomial sum(d);
        std::vector<std::uint32_t> box(d, 0);
        for (std::size_t axis = 0; axis < d; ++axis) box[axis] = p.degree_in(axis + 1);
        std::vector<std::uint32_t> current(d, 0);
        while (true) {
            const MultiIndex alpha{std::vector<std::uint32_t>(current)};
            const Rational weight = power(y, alpha) / Rational(factorial(alpha));
            sum = sum + scale(weight, partial(p, alpha));
            std::size_t axis = 0;
            while (axis < current.size() && current[axis] == box[axis]) {
                current[axis] = 0;
                ++axis;
            }
            if (axis == current.size()) break;
            ++current[axis];
        }
        return translate(p, y) == sum;
    });
}

SuiteReport suite_difference_calculus(const SuiteConfig& cfg) {
    SuiteReport report;
    std::vector<std::size_t> dimensions;
    if (cfg.fixed_dimension > 0) {
        dimensions.push_back(static_cast<std::size_t>(cfg.fixed_dimension));
    } else {
        dimensions = {1, 2, 3};
    }
    for (const std::size_t d : dimensions) {
        const std::vector<MultiIndex> small = truncate(LowerSet::full(d), 3);
        const std::vector<MultiIndex> targets = truncate(LowerSet::full(d), 4);
        for (const MultiIndex& alpha : small) {
            const Polynomial lhs = difference(Polynomial::monomial(alpha), alpha);
            const bool ok = lhs == Polynomial::constant(d, Rational(factorial(alpha)));
            ok ? ++report.pass : ++report.fail;
            if (!ok) report.notes.push_back("difference of its own monomial failed at " + to_string(alpha));
        }
        for (const MultiIndex& alpha : small) {
            for (const MultiIndex& beta : small) {
                bool ok = true;
                for (const MultiIndex& gamma : targets) {
                    const Polynomial q = Polynomial::monomial(gamma);
                    if (difference(difference(q, beta), alpha) != difference(q, alpha + beta)) {
                        ok = false;
                        break;
                    }
                }
                ok ? ++report.pass : ++report.fail;
                if (!ok) {
                    report.notes.push_back("composition law failed at " + to_string(alpha) + ", " +
                                           to_string(beta));
                }
            }
        }
    }
    return report;
}

} // namespace tdi

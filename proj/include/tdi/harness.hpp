#ifndef TDI_HARNESS_HPP
#define TDI_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdi/multiindex.hpp"
#include "tdi/polynomial.hpp"
#include "tdi/rng.hpp"
#include "tdi/spaces.hpp"

namespace tdi {

/// Sampling configuration for the brute-force oracles. `trials` is the batch
/// size of the stabilization rule: sampling stops once two consecutive
/// batches add nothing to the span.
struct TrialConfig {
    std::uint64_t seed = 0;
    int trials = 8;
    int dimension = 1;
    int degree_bound = 3;
    std::uint32_t coefficient_height = 9;
};

/// Outcome of a pointwise-limit check. witness and enveloping are present
/// iff member is false; enveloping then contains omega and excludes the
/// witness.
struct Verdict {
    bool member = false;
    std::optional<MultiIndex> witness;
    std::optional<LowerSet> enveloping;
    /// Largest grid residual against the limit, one entry per sequence
    /// element.
    std::vector<Rational> max_residuals;
    bool final_within_tolerance = false;
};

/// Point with nonzero coordinates drawn from the stream.
Point random_point(SplitMix64& rng, std::size_t d, std::uint32_t height);

/// Support drawn as a uniform subset of the candidate indices (in
/// enumeration order, one coin per index, coefficient drawn immediately
/// after an accepting coin).
Polynomial random_polynomial_stream(SplitMix64& rng, std::size_t d, int degree_bound,
                                    std::uint32_t height, const LowerSet* omega);

Polynomial random_polynomial(const TrialConfig& cfg);
Polynomial random_polynomial(const TrialConfig& cfg, const LowerSet& omega);

/// Span of random translates of p; per-trial seeds are cfg.seed plus the
/// running trial index.
PolySpace oracle_tau(const Polynomial& p, const TrialConfig& cfg);

/// Span of random dilates of p.
PolySpace oracle_sigma(const Polynomial& p, const TrialConfig& cfg);

/// Least fixed point of adding random translates and dilates of the current
/// basis, starting from span{p}.
PolySpace oracle_tausigma(const Polynomial& p, const TrialConfig& cfg);

/// difference(p, n) together with per-axis divisibility of the result by
/// x_k.
std::pair<Polynomial, std::vector<bool>> delta_power(const Polynomial& p, const MultiIndex& n);

/// Checks a claimed pointwise limit against a staircase space: every
/// sequence element must lie in omega (else SequenceNotInSpace), the final
/// element must match the limit on the grid within the exact tolerance
/// (recorded in the verdict), and membership of the limit decides the
/// verdict, with reduction data attached on failure.
Verdict check_closure(const LowerSet& omega, const std::vector<Polynomial>& sequence,
                      const Polynomial& limit, const std::vector<Point>& grid,
                      const Rational& tolerance);

/// Recovers the polynomial supported in truncate(omega, degree_bound) that
/// matches the value table; Inconsistent means no such polynomial exists.
Polynomial limit_fit(const std::vector<std::pair<Point, Rational>>& value_table,
                     const LowerSet& omega, std::uint32_t degree_bound);

/// Configuration of the randomized equivalence suites. fixed_dimension 0
/// cycles the ambient dimension through 1, 2, 3 by case index.
struct SuiteConfig {
    std::uint64_t seed = 0;
    int count = 8;
    int fixed_dimension = 0;
    int degree_bound = 3;
    std::uint32_t coefficient_height = 9;
};

struct SuiteReport {
    int pass = 0;
    int fail = 0;
    /// One line per failing case, deterministic.
    std::vector<std::string> notes;
};

/// Derivative-span orbit vs the span of random translates.
SuiteReport suite_translation_oracle(const SuiteConfig& cfg);
/// Support-monomial orbit vs the span of random dilates, plus the dimension
/// formula dim = |support|.
SuiteReport suite_dilation_oracle(const SuiteConfig& cfg);
/// Staircase monomial span vs the translate/dilate fixed-point oracle.
SuiteReport suite_monomial_closure_oracle(const SuiteConfig& cfg);
/// translate(p, y) vs the derivative expansion sum.
SuiteReport suite_taylor_identity(const SuiteConfig& cfg);
/// Exhaustive difference-operator laws for |alpha|, |beta| <= 3; the count
/// field is ignored, the dimension field restricts the checked dimensions.
SuiteReport suite_difference_calculus(const SuiteConfig& cfg);

} // namespace tdi

#endif

#ifndef TDI_MUNTZ_HPP
#define TDI_MUNTZ_HPP

#include <cstddef>
#include <vector>

namespace tdi {

/// Sorted distinct exponents; muntz_exponents always includes 0.
using ExponentSet = std::vector<unsigned>;

/// Least-squares fit of x^M by the span of {x^e : e in exponents} on a
/// uniform grid over [0, 1]. The only floating-point data in the library.
struct FitReport {
    unsigned exponent_bound = 0;
    ExponentSet exponents;
    std::vector<double> coefficients;
    double sum_sq_residual = 0.0;
    double sup_grid_error = 0.0;
    std::size_t grid_size = 0;
};

/// {0} union {primes <= bound} union {2 * prime <= bound}, sorted.
ExponentSet muntz_exponents(unsigned bound);

/// Minimizes the sum of squared residuals of sum c_e x^e - x^M over the
/// grid of `grid_size` equally spaced points in [0, 1] (endpoints included).
/// Columns are normalized to unit grid norm and orthogonalized by
/// Householder reflections; normal equations are never formed. Throws
/// TargetInSet when M is in E, RankDeficient when the grid is too small or
/// a column is numerically dependent.
FitReport least_squares_fit(const ExponentSet& exponents, unsigned target, std::size_t grid_size);

/// One fit per bound over a shared grid; bounds must be strictly increasing
/// and the target must stay outside every exponent set.
std::vector<FitReport> run_demo(unsigned target, const std::vector<unsigned>& bounds,
                                std::size_t grid_size);

} // namespace tdi

#endif

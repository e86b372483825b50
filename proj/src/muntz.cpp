#include "tdi/muntz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tdi/errors.hpp"

namespace tdi {

ExponentSet muntz_exponents(unsigned bound) {
    std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
    ExponentSet exponents = {0};
    for (unsigned n = 2; n <= bound; ++n) {
        if (composite[n]) continue;
        exponents.push_back(n);
        if (2 * n <= bound) exponents.push_back(2 * n);
        for (unsigned long long m = static_cast<unsigned long long>(n) * n; m <= bound; m += n) {
            composite[static_cast<std::size_t>(m)] = true;
        }
    }
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    return exponents;
}

FitReport least_squares_fit(const ExponentSet& exponents, unsigned target, std::size_t grid_size) {
    for (std::size_t i = 1; i < exponents.size(); ++i) {
        if (exponents[i - 1] >= exponents[i]) {
            throw std::invalid_argument("least_squares_fit: exponents must be sorted and distinct");
        }
    }
    if (std::binary_search(exponents.begin(), exponents.end(), target)) {
        throw TargetInSet("least_squares_fit: target exponent " + std::to_string(target) +
                          " lies in the exponent set");
    }
    if (grid_size < exponents.size() + 1 || grid_size < 2) {
        throw RankDeficient("least_squares_fit: grid too small for " +
                            std::to_string(exponents.size()) + " exponents");
    }

    const std::size_t m = grid_size;
    const std::size_t n = exponents.size();
    std::vector<double> x(m);
    for (std::size_t i = 0; i < m; ++i) {
        x[i] = static_cast<double>(i) / static_cast<double>(m - 1);
    }
    const auto column_of = [&](double exponent) {
        std::vector<double> column(m);
        for (std::size_t i = 0; i < m; ++i) {
            // 0^0 = 1 keeps the constant column well defined at x = 0.
            column[i] = exponent == 0.0 ? 1.0 : std::pow(x[i], exponent);
        }
        return column;
    };

    std::vector<std::vector<double>> original(n);
    std::vector<std::vector<double>> a(n);
    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j) {
        original[j] = column_of(static_cast<double>(exponents[j]));
        double norm_sq = 0.0;
        for (double v : original[j]) norm_sq += v * v;
        norms[j] = std::sqrt(norm_sq);
        if (!(norms[j] > 0.0)) {
            throw RankDeficient("least_squares_fit: zero column");
        }
        a[j].resize(m);
        for (std::size_t i = 0; i < m; ++i) a[j][i] = original[j][i] / norms[j];
    }
    std::vector<double> b = column_of(static_cast<double>(target));

    // Householder QR on the unit-normalized columns, reflectors applied to b
    // as they are formed. With unit columns the R diagonal is scale-free;
    // below 1e-16 a column is numerically dependent on its predecessors.
    for (std::size_t k = 0; k < n; ++k) {
        double sigma = 0.0;
        for (std::size_t i = k; i < m; ++i) sigma += a[k][i] * a[k][i];
        const double alpha = a[k][k] >= 0.0 ? -std::sqrt(sigma) : std::sqrt(sigma);
        if (std::abs(alpha) < 1e-16) {
            throw RankDeficient("least_squares_fit: numerically dependent column (exponent " +
                                std::to_string(exponents[k]) + ")");
        }
        std::vector<double> v(m, 0.0);
        for (std::size_t i = k; i < m; ++i) v[i] = a[k][i];
        v[k] -= alpha;
        double v_norm_sq = 0.0;
        for (std::size_t i = k; i < m; ++i) v_norm_sq += v[i] * v[i];
        const auto apply = [&](std::vector<double>& target_column) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i) dot += v[i] * target_column[i];
            const double factor = 2.0 * dot / v_norm_sq;
            for (std::size_t i = k; i < m; ++i) target_column[i] -= factor * v[i];
        };
        for (std::size_t j = k; j < n; ++j) apply(a[j]);
        apply(b);
    }

    // Back-substitution on R (stored in the transformed columns).
    std::vector<double> scaled(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double sum = b[k];
        for (std::size_t j = k + 1; j < n; ++j) sum -= a[j][k] * scaled[j];
        scaled[k] = sum / a[k][k];
    }

    FitReport report;
    report.exponents = exponents;
    report.grid_size = grid_size;
    report.coefficients.resize(n);
    for (std::size_t j = 0; j < n; ++j) report.coefficients[j] = scaled[j] / norms[j];

    std::vector<double> target_column = column_of(static_cast<double>(target));
    double sum_sq = 0.0;
    double sup = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double fitted = 0.0;
        for (std::size_t j = 0; j < n; ++j) fitted += report.coefficients[j] * original[j][i];
        const double residual = fitted - target_column[i];
        sum_sq += residual * residual;
        sup = std::max(sup, std::abs(residual));
    }
    report.sum_sq_residual = sum_sq;
    report.sup_grid_error = sup;
    return report;
}

std::vector<FitReport> run_demo(unsigned target, const std::vector<unsigned>& bounds,
                                std::size_t grid_size) {
    if (bounds.empty()) throw std::invalid_argument("run_demo: no bounds");
    for (std::size_t i = 1; i < bounds.size(); ++i) {
        if (bounds[i - 1] >= bounds[i]) {
            throw std::invalid_argument("run_demo: bounds must be strictly increasing");
        }
    }
    std::vector<FitReport> reports;
    reports.reserve(bounds.size());
    for (const unsigned bound : bounds) {
        FitReport report = least_squares_fit(muntz_exponents(bound), target, grid_size);
        report.exponent_bound = bound;
        reports.push_back(std::move(report));
    }
    return reports;
}

} // namespace tdi

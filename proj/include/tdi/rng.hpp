#ifndef TDI_RNG_HPP
#define TDI_RNG_HPP

#include <cstdint>

#include "tdi/rational.hpp"

namespace tdi {

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix-style 64-bit generator. The algorithm is part of the artifact
/// contract: every run must reproduce identical draws from equal seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += kSplitMixGamma;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, n); requires n >= 1.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    bool coin() { return (next() & 1) != 0; }

private:
    std::uint64_t state_;
};

/// Reduced fraction with numerator uniform in [-height, height] minus zero
/// and denominator uniform in [1, height].
inline Rational random_nonzero_rational(SplitMix64& rng, std::uint32_t height) {
    const std::uint64_t pick = rng.below(2 * std::uint64_t{height});
    const long numerator = pick < height ? static_cast<long>(pick + 1)
                                         : -static_cast<long>(pick - height + 1);
    const long denominator = static_cast<long>(1 + rng.below(height));
    return make_rational(Integer(numerator), Integer(denominator));
}

} // namespace tdi

#endif

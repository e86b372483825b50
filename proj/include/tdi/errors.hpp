#ifndef TDI_ERRORS_HPP
#define TDI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tdi {

/// Malformed textual input. `position` is the 1-based offset of the offending
/// character in the input string.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t position)
        : std::runtime_error("parse error at position " + std::to_string(position) + ": " + std::move(message)),
          position_(position) {}

    /// Structural errors with no single offending character.
    explicit ParseError(std::string message)
        : std::runtime_error("parse error: " + std::move(message)), position_(0) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Evaluation matrix is rank-deficient; the caller must supply different points.
class SingularSystem : public std::runtime_error {
public:
    explicit SingularSystem(const std::string& message) : std::runtime_error(message) {}
};

/// Point values cannot be matched by any polynomial over the allowed support.
class Inconsistent : public std::runtime_error {
public:
    explicit Inconsistent(const std::string& message) : std::runtime_error(message) {}
};

/// A sequence element has support outside the staircase it was claimed to live in.
class SequenceNotInSpace : public std::runtime_error {
public:
    SequenceNotInSpace(std::size_t index, const std::string& message)
        : std::runtime_error(message), index_(index) {}

    /// Index of the offending sequence element.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// The approximation target is already inside the exponent set.
class TargetInSet : public std::runtime_error {
public:
    explicit TargetInSet(const std::string& message) : std::runtime_error(message) {}
};

/// Grid too small or columns collinear at working precision.
class RankDeficient : public std::runtime_error {
public:
    explicit RankDeficient(const std::string& message) : std::runtime_error(message) {}
};

namespace detail {

inline void require_same_dimension(std::size_t a, std::size_t b, const char* where) {
    if (a != b) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
    }
}

} // namespace detail

} // namespace tdi

#endif

#ifndef MDO_ERROR_HPP
#define MDO_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mdo {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed operator or forcing-function text. `position()` is a 0-based
/// byte offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class solve_error : public error {
public:
    using error::error;
};

class zero_operator_error : public solve_error {
public:
    zero_operator_error() : solve_error("zero operator") {}
};

/// A x = b has no exact solution (A A+ b != b).
class unsolvable_error : public solve_error {
public:
    unsolvable_error() : solve_error("unsolvable") {}
};

class singular_matrix_error : public error {
public:
    singular_matrix_error() : error("singular matrix") {}
};

class dimension_error : public error {
public:
    using error::error;
};

/// Raised when a term lies outside the span of a basis.
class span_error : public error {
public:
    using error::error;
};

/// Substitute-back check found a nonzero residual. Always a bug.
class verification_error : public error {
public:
    using error::error;
};

} // namespace mdo

#endif

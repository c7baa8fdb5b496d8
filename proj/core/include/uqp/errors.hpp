#ifndef UQP_ERRORS_HPP
#define UQP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace uqp {

// Thrown when a computation exceeds a configured degree or step limit.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Expression syntax error carrying the byte offset and the tokens that
// would have been accepted at that position.
struct SyntaxError : std::runtime_error {
    std::size_t offset;
    std::string expected;
    SyntaxError(const std::string& msg, std::size_t off, std::string exp)
        : std::runtime_error(msg), offset(off), expected(std::move(exp)) {}
};

} // namespace uqp

#endif

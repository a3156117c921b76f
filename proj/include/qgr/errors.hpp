#ifndef QGR_ERRORS_HPP
#define QGR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgr {

// Integer overflow in exact arithmetic. Coefficients are checked 64-bit
// integers; any operation that would wrap fails loudly instead.
struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// A truncated series was too shallow to certify the requested value.
struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid mathematical input (bad Cartan type, non-dominant argument, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A configurable resource cap (iteration limit, retry budget) was exceeded.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Text input that does not match the literal grammar; carries the offset of
// the first offending character.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t at)
      : std::runtime_error(what + " at offset " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

}  // namespace qgr

#endif

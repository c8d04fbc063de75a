#ifndef MVQ_ERRORS_HPP
#define MVQ_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mvq {

/// An element failed validation against the algebra it was used with
/// (wrong arity or a coordinate outside 0..n_i).
class invalid_element : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed the configured search budget.
/// Carries the offending size and the limit it ran into.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, std::uint64_t size, std::uint64_t limit)
      : std::runtime_error(what + " (size " + std::to_string(size) + " exceeds limit " +
                           std::to_string(limit) + ")"),
        size_(size),
        limit_(limit) {}

  std::uint64_t size() const noexcept { return size_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t size_;
  std::uint64_t limit_;
};

/// Syntax error in the term / quasiequation language, with byte position.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t position, const std::string& message)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mvq

#endif  // MVQ_ERRORS_HPP

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gowers {

// Input exceeds the sizes the library is willing to enumerate or store.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Operands live in different dimensions (variable counts, register counts).
class DimensionError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A numeric argument lies outside the domain of the operation.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
  public:
    ParseError(const std::string &message, std::size_t position)
        : std::invalid_argument(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

// Two independent computations of the same quantity disagree.
class CrossCheckError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

}  // namespace gowers

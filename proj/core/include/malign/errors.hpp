#ifndef MALIGN_ERRORS_HPP
#define MALIGN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace malign {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two operands have incompatible embedding dimensionality.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An input violates a structural invariant (empty sequence, non-finite
// component, malformed argument).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An alignment's length does not match the audio sequence it aligns.
class LengthError : public Error {
 public:
  using Error::Error;
};

// An alignment entry points outside the text sequence.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured cap.
class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

// A gradient was requested at a point where the metric is not
// differentiable (L2/L1 with an aligned pair at zero distance).
class NonDifferentiablePoint : public Error {
 public:
  using Error::Error;
};

// A random-pair baseline has zero sample standard deviation.
class DegenerateBaseline : public Error {
 public:
  using Error::Error;
};

// Gradient descent blew past the divergence guard.
class DivergenceDetected : public Error {
 public:
  DivergenceDetected(const std::string& msg, std::size_t step)
      : Error(msg), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace malign

#endif  // MALIGN_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace rsd {

// Raised when an input violates an operation's precondition (bad data,
// mismatched series, out-of-range parameter). The CLI maps it to exit code 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a numerical procedure cannot reach its stated accuracy.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double achieved = 0.0)
      : std::runtime_error(what), achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

 private:
  double achieved_;
};

}  // namespace rsd

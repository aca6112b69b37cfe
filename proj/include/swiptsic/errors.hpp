#pragma once

#include <stdexcept>

namespace swiptsic {

// Bad configuration or out-of-range input.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The numerical machinery could not deliver a value of the requested quality.
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No admissible power split satisfies the coverage constraint.
class infeasible_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

// Filesystem trouble while reading configuration or writing results.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swiptsic

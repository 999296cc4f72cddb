#pragma once

#include <stdexcept>
#include <string>

namespace coxforge {

// Error taxonomy shared by the C API and the CLI exit codes:
//   input_error    -> 1   bad user input (syntax, invalid matrix, bad flags)
//   budget_error   -> 2   a work or size limit was exhausted
//   internal_error -> 3   invariant failure; indicates a bug
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class internal_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coxforge

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ferro {

// Base class for every failure raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Configuration text rejected; the message carries line numbers.
struct ConfigError : Error {
  using Error::Error;
};

// Binary dump unreadable, truncated, or inconsistent.
struct IoError : Error {
  using Error::Error;
};

// Time stepping produced non-finite values or violated the step-size bound.
struct BlowUpError : Error {
  BlowUpError(const std::string& what, double t, std::size_t step_index)
      : Error(what), time(t), step(step_index) {}
  double time;
  std::size_t step;
};

}  // namespace ferro

#pragma once

#include <stdexcept>
#include <string>

namespace ldm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: a config key, a CLI argument, a grid size.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two fields or trajectories that must share a grid (or snapshot times) do not.
class GridMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Malformed or incompatible file contents.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Non-finite coefficient produced by the time integrator.
class BlowUpError : public Error {
 public:
  BlowUpError(long step, double t)
      : Error("non-finite state at step " + std::to_string(step) + " (t=" + std::to_string(t) +
              "); time step likely violates the CFL limit"),
        step_(step),
        t_(t) {}

  long step() const noexcept { return step_; }
  double time() const noexcept { return t_; }

 private:
  long step_;
  double t_;
};

}  // namespace ldm

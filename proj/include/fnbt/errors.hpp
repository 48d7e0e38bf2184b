#ifndef FNBT_ERRORS_HPP
#define FNBT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fnbt {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid frame construction, width overflow, or a name missing from a target frame.
class FrameError : public Error {
 public:
  using Error::Error;
};

/// Set algebra or combination attempted across different frames.
class FrameMismatch : public Error {
 public:
  using Error::Error;
};

/// A mass assignment that breaks the mass-function axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Normalization impossible: the sources contradict each other completely.
class TotalConflict : public Error {
 public:
  explicit TotalConflict(const std::string& what, double k = 1.0) : Error(what), k_(k) {}
  double k() const noexcept { return k_; }

 private:
  double k_;
};

/// Dataset ingestion and benchmark protocol failures.
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace fnbt

#endif  // FNBT_ERRORS_HPP

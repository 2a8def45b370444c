#pragma once

#include <stdexcept>
#include <string>

namespace mnf {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One candidate non-face contains another, or a set is listed twice.
class AntichainViolation : public Error {
 public:
  using Error::Error;
};

/// A candidate non-face has fewer than two vertices.
class SizeViolation : public Error {
 public:
  using Error::Error;
};

/// A vertex label lies outside the ground set.
class RangeViolation : public Error {
 public:
  using Error::Error;
};

class NotAFace : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An internal size limit was exceeded (face counts, lattice size, ...).
class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotInLattice : public Error {
 public:
  using Error::Error;
};

/// The nerve does not come from an unsuspended complex.
class Irrecoverable : public Error {
 public:
  using Error::Error;
};

class CheckpointCorrupt : public Error {
 public:
  using Error::Error;
};

class ConfigMismatch : public Error {
 public:
  using Error::Error;
};

class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace mnf

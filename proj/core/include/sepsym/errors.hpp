#pragma once

#include <stdexcept>
#include <string>

namespace sepsym {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different ground sets. A programming error, never data.
class GroundSetMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

// No closed-form target exists for the requested relation/domain pair.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class InvalidSeedError : public Error {
 public:
  using Error::Error;
};

class ParityError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NotMaximalError : public Error {
 public:
  using Error::Error;
};

class NoTilingError : public Error {
 public:
  using Error::Error;
};

class NotMCoveredError : public Error {
 public:
  using Error::Error;
};

class NotSymmetricError : public Error {
 public:
  using Error::Error;
};

class BadMembraneError : public Error {
 public:
  using Error::Error;
};

class BadInputError : public Error {
 public:
  using Error::Error;
};

class NoCubillageError : public Error {
 public:
  using Error::Error;
};

}  // namespace sepsym

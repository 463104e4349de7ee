#ifndef DWKIT_ERROR_HPP
#define DWKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dwkit {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically invalid request: non-orientable input, violated
/// coprimality, an infinite field space, an inconsistent gluing.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data: unparsable JSON, structurally broken complexes,
/// unknown specifiers.
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace dwkit

#endif  // DWKIT_ERROR_HPP

#ifndef LATPATH_ERRORS_H_
#define LATPATH_ERRORS_H_

#include <stdexcept>
#include <string>

namespace latpath {

// Precondition violation on an argument: element out of range, overlapping
// minor sets, disconnected input where a connected one is required.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed textual input. `position` is 1-based, 0 when unknown.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, int position)
      : DomainError(what), position_(position) {}
  int position() const { return position_; }

 private:
  int position_;
};

// A brute-force routine was asked to work on a ground set above the cap.
class ResourceError : public std::length_error {
 public:
  explicit ResourceError(const std::string& what) : std::length_error(what) {}
};

class MalformedPresentationError : public DomainError {
 public:
  explicit MalformedPresentationError(const std::string& what)
      : DomainError(what) {}
};

class InvalidRelaxationError : public DomainError {
 public:
  explicit InvalidRelaxationError(const std::string& what)
      : DomainError(what) {}
};

class InvalidPavingError : public DomainError {
 public:
  explicit InvalidPavingError(const std::string& what) : DomainError(what) {}
};

// The requested element lies in no spanning circuit: it is the basepoint of
// a parallel connection of two matroids of rank at least two.
class NoSpanningCircuitError : public DomainError {
 public:
  explicit NoSpanningCircuitError(const std::string& what)
      : DomainError(what) {}
};

}  // namespace latpath

#endif  // LATPATH_ERRORS_H_

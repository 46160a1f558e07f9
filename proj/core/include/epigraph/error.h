#ifndef EPIGRAPH_ERROR_H_
#define EPIGRAPH_ERROR_H_

#include <stdexcept>
#include <string>

namespace epigraph {

// Base of everything the library throws. Subclasses let the CLI map
// failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ConnectivityError : public Error {
 public:
  using Error::Error;
};

class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

// A curing policy returned an allocation that breaks the budget contract.
class PolicyFault : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace epigraph

#endif  // EPIGRAPH_ERROR_H_

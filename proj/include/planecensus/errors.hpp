#pragma once

#include <stdexcept>
#include <string>

namespace planecensus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct DuplicatePointError : Error {
  int first, second;
  DuplicatePointError(int a, int b)
      : Error("duplicate points at indices " + std::to_string(a) + " and " + std::to_string(b)),
        first(a), second(b) {}
};

struct CollinearTripleError : Error {
  int a, b, c;
  CollinearTripleError(int i, int j, int k)
      : Error("collinear triple at indices " + std::to_string(i) + ", " + std::to_string(j) +
              ", " + std::to_string(k)),
        a(i), b(j), c(k) {}
};

struct GenerationFailure : Error {
  using Error::Error;
};

// census
struct ResourceLimitError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct ZeroDenominatorError : Error {
  using Error::Error;
};

// vings
struct HullVertexError : Error {
  using Error::Error;
};

struct NotXVingError : Error {
  using Error::Error;
};

struct NotX5VingError : Error {
  using Error::Error;
};

// formulas
struct DomainError : Error {
  using Error::Error;
};

struct OutOfRangeError : Error {
  using Error::Error;
};

// charging
struct InvalidCaseError : Error {
  using Error::Error;
};

struct InfeasibleParamsError : Error {
  using Error::Error;
};

struct InfeasibleModelError : Error {
  using Error::Error;
};

struct NotTriangularHullError : Error {
  using Error::Error;
};

// io
struct IoError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

}  // namespace planecensus

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pbasis {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad type string or rank outside the family's range.
struct InvalidTypeError : Error {
  using Error::Error;
};

struct SingularMatrixError : Error {
  using Error::Error;
};

// A Weyl orbit grew past the configured cap.
struct OrbitCapError : Error {
  std::size_t cap;
  explicit OrbitCapError(std::size_t cap_, const std::string& msg) : Error(msg), cap(cap_) {}
};

// Gram-Schmidt hit a zero pivot: input vector `index` lies in the span of its predecessors.
struct DependentInputError : Error {
  std::size_t index;
  DependentInputError(std::size_t index_, const std::string& msg) : Error(msg), index(index_) {}
};

// The differentials of a generator set failed the linear-independence check at rho/rho_check.
struct IndependenceError : Error {
  std::size_t index;   // first offending generator position
  int degree;          // its degree
  std::string suggestion;
  IndependenceError(std::size_t index_, int degree_, std::string suggestion_,
                    const std::string& msg)
      : Error(msg), index(index_), degree(degree_), suggestion(std::move(suggestion_)) {}
};

}  // namespace pbasis

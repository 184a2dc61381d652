// Shared scalar type and error categories.
#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace repunit {

// All semigroup elements, degrees, shifts and coefficients are exact,
// unbounded integers. Exactness must never depend on magnitude bounds.
using Int = boost::multiprecision::cpp_int;

/// Rejected input: bad parameters, malformed data, resource guards.
class ParamError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A structural identity that the construction guarantees did not hold
/// at runtime. Reaching this means a claim was falsified (or a fault
/// was injected on purpose).
class CheckError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Outcome of one verification pass. `detail` carries a witness on
/// failure and a short summary on success.
struct CheckReport {
    bool pass = true;
    std::string detail;
};

}  // namespace repunit

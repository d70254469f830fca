#pragma once

#include <stdexcept>
#include <string>

namespace pell3 {

// Argument outside an operation's domain, e.g. a closed form asked for an
// index below its validity threshold.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Two quadratic-extension elements with different discriminants were combined.
class IncompatibleExtension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameter t hits a pole or a root collision of the substitution chain.
class DegenerateParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Series without an invertible constant term.
class NonUnitSeries : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inner series of a composition has a nonzero constant term.
class CompositionDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An identity that must hold exactly did not.
class IdentityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pell3

#ifndef CURLED_ERROR_HPP
#define CURLED_ERROR_HPP

#include <stdexcept>
#include <string>

namespace curled {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different fields were combined.
class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a finite field (or some other capability) the field lacks.
class UnsupportedFieldError : public Error {
 public:
  using Error::Error;
};

class InvalidFieldError : public Error {
 public:
  using Error::Error;
};

class NotCurledNormalFormError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class MissingBindingError : public Error {
 public:
  using Error::Error;
};

class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace curled

#endif  // CURLED_ERROR_HPP

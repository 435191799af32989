#pragma once

#include <stdexcept>
#include <string>

namespace dres {

/// Base class of every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define DRES_DEFINE_ERROR(Name)                                 \
  struct Name : Error {                                         \
    using Error::Error;                                         \
    const char* kind() const noexcept override { return #Name; } \
  }

DRES_DEFINE_ERROR(DivisionByZero);
DRES_DEFINE_ERROR(DivisionByZeroOperator);
DRES_DEFINE_ERROR(AllZeroOperators);
DRES_DEFINE_ERROR(ZeroPolynomial);
DRES_DEFINE_ERROR(NonRepresentable);
DRES_DEFINE_ERROR(EmptyHomogeneousSet);
DRES_DEFINE_ERROR(OrderEscalation);
DRES_DEFINE_ERROR(ZeroResultant);
DRES_DEFINE_ERROR(ZeroDivisor);
DRES_DEFINE_ERROR(InvalidSystem);
DRES_DEFINE_ERROR(SemanticError);

#undef DRES_DEFINE_ERROR

/// Parse failure with a 1-based source position.
struct SyntaxError : Error {
  SyntaxError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  const char* kind() const noexcept override { return "SyntaxError"; }
  int line;
  int column;
};

}  // namespace dres

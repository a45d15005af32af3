#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller handed us something outside an operation's domain (CLI exit 3).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but the algorithm does not cover it (CLI exit 4).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// Broken invariant inside the library. Never expected.
class InternalError : public Error {
 public:
  using Error::Error;
};

#define QPC_PRECONDITION(Name)                 \
  class Name : public PreconditionError {      \
   public:                                     \
    using PreconditionError::PreconditionError; \
  }

QPC_PRECONDITION(DimensionVectorError);
QPC_PRECONDITION(EqualRankError);
QPC_PRECONDITION(ContractionUndefined);
QPC_PRECONDITION(LookupError);
QPC_PRECONDITION(DegenerateTermError);
QPC_PRECONDITION(TypingError);
QPC_PRECONDITION(HeartLocusError);
QPC_PRECONDITION(AssumptionViolation);
QPC_PRECONDITION(GenericityError);
QPC_PRECONDITION(NotInLieAlgebra);
QPC_PRECONDITION(DivisionError);

#undef QPC_PRECONDITION

class UnsupportedReduction : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

class ScopeError : public UnsupportedError {
 public:
  using UnsupportedError::UnsupportedError;
};

}  // namespace qpc

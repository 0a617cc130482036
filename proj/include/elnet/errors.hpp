#pragma once

#include <stdexcept>
#include <string>

namespace elnet {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularInterior : Error {
  using Error::Error;
};
struct NotNilpotent : Error {
  using Error::Error;
};
struct UnsupportedMatrix : Error {
  using Error::Error;
};
struct MoveNotApplicable : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NegativeParameter : Error {
  using Error::Error;
};
struct SingularDenominator : Error {
  using Error::Error;
};
struct NotInTopCell : Error {
  using Error::Error;
};
struct ResidueNotIdentity : Error {
  using Error::Error;
};
struct NonPositiveParameter : Error {
  using Error::Error;
};
struct ClosureBudgetExceeded : Error {
  using Error::Error;
};
struct UnknownName : Error {
  using Error::Error;
};
struct UnsupportedType : Error {
  using Error::Error;
};
struct EvenSize : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace elnet

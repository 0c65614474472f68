#pragma once

#include <stdexcept>
#include <string>

namespace weakhopf {

enum class Errc {
  DivisionByZero,
  NoSuchRoot,
  FieldMismatch,
  InvalidField,
  ShapeMismatch,
  DimensionMismatch,
  InvalidStructure,
  InvalidGroup,
  NoAntipode,
  Underdetermined,
  NotAbelian,
  BadCharacteristic,
  NotHopf,
  NotSubgroup,
  InvalidLambda,
  InvalidZ,
  InvalidComponent,
  NotMatched,
  NotCompatible,
  PreconditionUnmet,
  WellDefinednessFailure,
  AntipodeAxiomFailure,
  NotAnIntegral,
  ConditionFails,
  ParseError,
  UnknownExample,
  BadParams,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace weakhopf

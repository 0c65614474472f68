#include "weakhopf/error.hpp"

namespace weakhopf {

const char* errc_name(Errc e) {
  switch (e) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NoSuchRoot: return "NoSuchRoot";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::InvalidField: return "InvalidField";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::InvalidStructure: return "InvalidStructure";
    case Errc::InvalidGroup: return "InvalidGroup";
    case Errc::NoAntipode: return "NoAntipode";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::BadCharacteristic: return "BadCharacteristic";
    case Errc::NotHopf: return "NotHopf";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::InvalidLambda: return "InvalidLambda";
    case Errc::InvalidZ: return "InvalidZ";
    case Errc::InvalidComponent: return "InvalidComponent";
    case Errc::NotMatched: return "NotMatched";
    case Errc::NotCompatible: return "NotCompatible";
    case Errc::PreconditionUnmet: return "PreconditionUnmet";
    case Errc::WellDefinednessFailure: return "WellDefinednessFailure";
    case Errc::AntipodeAxiomFailure: return "AntipodeAxiomFailure";
    case Errc::NotAnIntegral: return "NotAnIntegral";
    case Errc::ConditionFails: return "ConditionFails";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownExample: return "UnknownExample";
    case Errc::BadParams: return "BadParams";
  }
  return "Unknown";
}

}  // namespace weakhopf

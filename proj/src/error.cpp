#include "tcrit/error.hpp"

namespace tcrit {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::NonPure: return "NonPure";
    case Errc::Empty: return "Empty";
    case Errc::DuplicateTop: return "DuplicateTop";
    case Errc::InvalidSimplex: return "InvalidSimplex";
    case Errc::DimOutOfRange: return "DimOutOfRange";
    case Errc::UnknownFace: return "UnknownFace";
    case Errc::TopFace: return "TopFace";
    case Errc::LinkTooSmall: return "LinkTooSmall";
    case Errc::DisconnectedLink: return "DisconnectedLink";
    case Errc::NotConverged: return "NotConverged";
    case Errc::NumericalMismatch: return "NumericalMismatch";
    case Errc::BadDims: return "BadDims";
    case Errc::MissingS: return "MissingS";
    case Errc::NotSupported: return "NotSupported";
    case Errc::EmptyKernel: return "EmptyKernel";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::BadLabel: return "BadLabel";
    case Errc::Disconnected: return "Disconnected";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::TooLarge: return "TooLarge";
    case Errc::MissingCos: return "MissingCos";
    case Errc::BadGonality: return "BadGonality";
    case Errc::BadParams: return "BadParams";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NotPrime: return "NotPrime";
    case Errc::ParseError: return "ParseError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace tcrit

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tcrit {

enum class Errc {
  NonPure,
  Empty,
  DuplicateTop,
  InvalidSimplex,
  DimOutOfRange,
  UnknownFace,
  TopFace,
  LinkTooSmall,
  DisconnectedLink,
  NotConverged,
  NumericalMismatch,
  BadDims,
  MissingS,
  NotSupported,
  EmptyKernel,
  WrongDimension,
  BadLabel,
  Disconnected,
  DegenerateDenominator,
  TooLarge,
  MissingCos,
  BadGonality,
  BadParams,
  TooSmall,
  NotPrime,
  ParseError,
  IoError,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tcrit

#pragma once

#include <stdexcept>
#include <string>

namespace gpblend {

enum class ErrorKind {
  DimensionMismatch,
  IoError,
  UnsupportedFormat,
  ImageTooSmall,
  BadTargetDims,
  TooManyLevels,
  WrongKind,
  BetaNonPositive,
  BadKernel,
  NoExterior,
  GuideDimensionMismatch,
  GuideFileBadDims,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for filesystem and codec failures, false for bad inputs.
  bool is_io() const noexcept {
    return kind_ == ErrorKind::IoError || kind_ == ErrorKind::UnsupportedFormat;
  }

 private:
  ErrorKind kind_;
};

}  // namespace gpblend

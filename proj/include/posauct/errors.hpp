#pragma once

#include <stdexcept>
#include <string>

namespace posauct {

enum class Errc {
  NonPositiveEntry,
  CtrsNotSorted,
  LengthMismatch,
  ProfileShapeMismatch,
  TooLarge,
  ParamOutOfRange,
  ParseError,
  NoEquilibriumFound,
  ProfileNotNoOverCompliant,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPositiveEntry: return "NonPositiveEntry";
    case Errc::CtrsNotSorted: return "CtrsNotSorted";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::ProfileShapeMismatch: return "ProfileShapeMismatch";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::NoEquilibriumFound: return "NoEquilibriumFound";
    case Errc::ProfileNotNoOverCompliant: return "ProfileNotNoOverCompliant";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace posauct

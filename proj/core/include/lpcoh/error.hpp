#ifndef LPCOH_ERROR_HPP
#define LPCOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lpcoh {

enum class ErrorKind {
  UnsupportedRank,
  ParseError,
  CompactGroup,
  NotSimple,
  UnknownForm,
  BadIndex,
  NotGoodRoot,
  MissingMultiplicities,
  NotAdmissible,
  ExponentOutOfRange,
  DegreeOutOfRange,
  NotLowDegree,
  InvalidDatabase,
  ArithmeticOverflow,
};

constexpr const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnsupportedRank:       return "UnsupportedRank";
    case ErrorKind::ParseError:            return "ParseError";
    case ErrorKind::CompactGroup:          return "CompactGroup";
    case ErrorKind::NotSimple:             return "NotSimple";
    case ErrorKind::UnknownForm:           return "UnknownForm";
    case ErrorKind::BadIndex:              return "BadIndex";
    case ErrorKind::NotGoodRoot:           return "NotGoodRoot";
    case ErrorKind::MissingMultiplicities: return "MissingMultiplicities";
    case ErrorKind::NotAdmissible:         return "NotAdmissible";
    case ErrorKind::ExponentOutOfRange:    return "ExponentOutOfRange";
    case ErrorKind::DegreeOutOfRange:      return "DegreeOutOfRange";
    case ErrorKind::NotLowDegree:          return "NotLowDegree";
    case ErrorKind::InvalidDatabase:       return "InvalidDatabase";
    case ErrorKind::ArithmeticOverflow:    return "ArithmeticOverflow";
  }
  return "DomainError";
}

/// Error thrown by all domain operations. `kind()` is stable and machine
/// readable; `what()` carries a one-line explanation.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* kind_name() const noexcept { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw DomainError(kind, msg);
}

}  // namespace lpcoh

#endif

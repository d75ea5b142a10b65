#pragma once

#include <stdexcept>
#include <string>

namespace liaison {

enum class ErrorKind {
  RingMismatch,
  ZeroPolynomial,
  NotHomogeneous,
  EmptyScheme,
  NotCurve,
  OutOfRange,
  SaturationDiverged,
  UnknownCMStatus,
  NotSaturated,
  NotCM,
  WrongCodim,
  NotContained,
  NotRegularPair,
  NotProper,
  Unsupported,
  NotSubcanonical,
  NotSelfLinked,
  NonPositiveDegree,
  NoLiftFound,
  RetryExhausted,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::EmptyScheme: return "EmptyScheme";
    case ErrorKind::NotCurve: return "NotCurve";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SaturationDiverged: return "SaturationDiverged";
    case ErrorKind::UnknownCMStatus: return "UnknownCMStatus";
    case ErrorKind::NotSaturated: return "NotSaturated";
    case ErrorKind::NotCM: return "NotCM";
    case ErrorKind::WrongCodim: return "WrongCodim";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotRegularPair: return "NotRegularPair";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotSubcanonical: return "NotSubcanonical";
    case ErrorKind::NotSelfLinked: return "NotSelfLinked";
    case ErrorKind::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorKind::NoLiftFound: return "NoLiftFound";
    case ErrorKind::RetryExhausted: return "RetryExhausted";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the engine carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}
  ErrorKind kind() const { return kind_; }
  /// The message without the kind prefix.
  const std::string& detail() const { return detail_; }

  /// Precondition failures as opposed to engine faults.
  bool is_precondition() const {
    return kind_ != ErrorKind::Internal && kind_ != ErrorKind::SaturationDiverged;
  }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Internal, what);
}

}  // namespace liaison

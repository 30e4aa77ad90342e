#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hcc {

enum class ErrorKind {
  MalformedTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotComposable,
  MissingIdentity,
  NotInvertible,
  NotUnital,
  BadFunctor,
  IllDefinedComposition,
  BudgetExceeded,
  NonAbelianEntry,
  NotCommutative,
  NotWellDefined,
  SplittingMismatch,
  InconsistencyDetected,
  ParseError,
  ValidationError,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::BadFunctor: return "BadFunctor";
    case ErrorKind::IllDefinedComposition: return "IllDefinedComposition";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NonAbelianEntry: return "NonAbelianEntry";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::SplittingMismatch: return "SplittingMismatch";
    case ErrorKind::InconsistencyDetected: return "InconsistencyDetected";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI maps onto exit codes; `what()` carries the witnessing cells.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t requested, std::uint64_t limit)
      : Error(ErrorKind::BudgetExceeded, describe(what, requested, limit)),
        requested_(requested),
        limit_(limit) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  static std::string describe(const std::string& what, std::uint64_t requested, std::uint64_t limit) {
    std::ostringstream os;
    os << what << " search space " << requested << " exceeds budget " << limit;
    return os.str();
  }

  std::uint64_t requested_;
  std::uint64_t limit_;
};

namespace detail {

template <typename... Args>
std::string concat(Args&&... args) {
  std::ostringstream os;
  (os << ... << std::forward<Args>(args));
  return os.str();
}

template <typename... Args>
[[noreturn]] void fail(ErrorKind kind, Args&&... args) {
  throw Error(kind, concat(std::forward<Args>(args)...));
}

// Saturating product for search-space sizes.
inline std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace detail
}  // namespace hcc

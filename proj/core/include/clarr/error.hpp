#ifndef CLARR_ERROR_HPP
#define CLARR_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace clarr {

enum class ErrorCode {
  kSingularMatrix,
  kZeroPolynomial,
  kNonHomogeneous,
  kNotZeroDimensional,
  kVerificationMismatch,
  kCommonComponent,
  kDegenerateLine,
  kDegenerateConic,
  kDuplicateComponent,
  kEmptyArrangement,
  kNotConicLine,
  kResolutionNotStabilized,
  kClassificationInconsistency,
  kUnsupportedDegree,
  kParseError,
  kDegenerateWindow,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for every failure raised by the engine. The code is the
/// stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                  message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace clarr

#endif  // CLARR_ERROR_HPP

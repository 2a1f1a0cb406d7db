#ifndef SEDQ_ERROR_H
#define SEDQ_ERROR_H

#include <stdexcept>
#include <string>

namespace sedq {

enum class ErrorCode {
  CollinearInput,
  EmptyInput,
  TooFewPoints,
  TooLarge,
  NotOnBisector,
  NoVertices,
  InconsistentOracle,
  HullsOverlap,
  OverlapDetected,
  NoIntersection,
  EmptyQuery,
  IoError,
  ParseError,
  InvariantViolation,
};

const char* error_code_name(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail_invariant(const char* expr, const char* file, int line);

}  // namespace sedq

// Always-on internal check; violations throw InvariantViolation.
#define SEDQ_CHECK(cond)                                              \
  do {                                                                \
    if (!(cond)) ::sedq::fail_invariant(#cond, __FILE__, __LINE__);   \
  } while (0)

#endif

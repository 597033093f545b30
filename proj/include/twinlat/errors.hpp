// Error taxonomy shared by the core library, the C API and the CLI.

#ifndef TWINLAT_ERRORS_HPP
#define TWINLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace twinlat {

enum class ErrorCode {
  InvalidInput,    // malformed matrix, bad root literal, bad JSON
  NotPrenilpotent, // interval requested for a non-prenilpotent pair
  NotNilpotent,    // nibbling requested for a non-nilpotent set
  NoNibblingFound, // greedy nibbling exhausted without finding an order
  BudgetExceeded,  // ball cap or radius schedule exhausted
  Inapplicable,    // a named hypothesis of the requested result fails
  Internal,        // invariant violation inside the library
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

} // namespace twinlat

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace iou {

// Error categories; the CLI maps them onto process exit codes.
enum class errc {
  config,                // bad configuration / parameter out of range
  data,                  // unreadable or invalid input data
  domain,                // kernel evaluated outside its mathematical domain
  input,                 // non-finite values where finite ones are required
  degenerate_design,     // realized N-hat = 0
  degenerate_variance,   // some Lambda_jj below the positivity guard
  refused_enumeration,   // tuple space larger than the enumeration cap
  resource,              // memory / retry-budget guard tripped
  oracle_failure,        // an oracle identity did not hold
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace iou

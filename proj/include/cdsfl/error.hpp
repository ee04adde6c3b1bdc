#pragma once

#include <stdexcept>
#include <string>

namespace cdsfl {

// Error categories shared between the C++ core and the C API status codes.
enum class errc {
  invalid_argument,
  io_error,
  parse_error,
  config_error,
  dimension_mismatch,
  empty_population,
  constraint_violation,
  infeasible,
  numeric_error,
  unsupported,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::io_error: return "io_error";
    case errc::parse_error: return "parse_error";
    case errc::config_error: return "config_error";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::empty_population: return "empty_population";
    case errc::constraint_violation: return "constraint_violation";
    case errc::infeasible: return "infeasible";
    case errc::numeric_error: return "numeric_error";
    case errc::unsupported: return "unsupported";
  }
  return "unknown";
}

}  // namespace cdsfl

#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Every failure mode the library reports.  The CLI maps these onto exit
// codes: consistency_failure and criteria_disagreement are internal errors
// (exit 2), everything else is a usage/input error (exit 1).
enum class Errc {
  out_of_range,
  duplicate_endpoint,
  degenerate_pair,
  bad_interval,
  size_mismatch,
  not_an_arc,
  not_end_point,
  not_fixed_point,
  same_arc,
  bad_parameters,
  not_standard,
  bad_shape,
  not_maximal,
  empty,
  limit_exceeded,
  consistency_failure,
  criteria_disagreement,
  parse_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace springer

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ostrowski {

enum class ErrorKind {
  centre_mismatch,   // binary op on series with distinct centres
  horizon,           // request beyond the stored coefficient horizon
  singularity,       // division by the centre when it is 0
  branch_domain,     // log requested on a disc containing 0
  domain,            // point outside the declared disc
  schedule,          // gap schedule invariant or slack violated
  point_set_mismatch,
  parse,
  config,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::centre_mismatch: return "centre mismatch";
    case ErrorKind::horizon: return "horizon error";
    case ErrorKind::singularity: return "singularity";
    case ErrorKind::branch_domain: return "branch-domain error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::schedule: return "schedule error";
    case ErrorKind::point_set_mismatch: return "point-set mismatch";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::config: return "config error";
  }
  return "error";
}

}  // namespace ostrowski

#pragma once

#include <stdexcept>
#include <string>

namespace latt {

enum class ErrorKind {
  NotAPartialOrder,
  NotALattice,
  Unbounded,
  NotComparable,
  TrivialSummand,
  NotACongruence,
  FullCongruenceInHsum,
  BadElements,
  NotDeltaPreserving,
  NotASublattice,
  CapExceeded,
  Parse,
  Io,
};

const char* kind_name(ErrorKind k) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latt

#pragma once

#include <stdexcept>
#include <string>

namespace cylgame {

enum class ErrorKind {
  InvalidArgument,  // precondition violated (bad index, bad dimension, ...)
  Parse,            // malformed algebra file or JSON document
  Budget,           // a configured cap (positions, atoms, matrices) was exceeded
  MixedAlgebra,     // operands belong to different algebra representations
  NonUniform,       // lift rule cannot be evaluated on symbolic copy blocks
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, const std::string& what) {
  if (!cond) fail(ErrorKind::InvalidArgument, what);
}

}  // namespace cylgame

#pragma once

#include <stdexcept>
#include <string>

namespace ordrep {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error {
  using Error::Error;
};

struct ClosureExceedsCap : Error {
  using Error::Error;
};

struct NotAHomomorphism : Error {
  // element indices of the witnessing pair: assignment(s)*assignment(t) != assignment(s*t)
  int s = -1;
  int t = -1;
  NotAHomomorphism(const std::string& msg, int s_, int t_) : Error(msg), s(s_), t(t_) {}
};

struct NotASubgroup : Error {
  using Error::Error;
};

struct GroupMismatch : Error {
  using Error::Error;
};

struct IrreducibleRequired : Error {
  using Error::Error;
};

struct NotIrreducible : Error {
  using Error::Error;
};

struct TooManyOrbits : Error {
  using Error::Error;
};

struct NotTransitive : Error {
  using Error::Error;
};

struct TrivialSystem : Error {
  using Error::Error;
};

struct ChainViolation : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  std::string field;
  ParseError(const std::string& msg, int line_, std::string field_ = {})
      : Error("line " + std::to_string(line_) +
              (field_.empty() ? std::string() : " [" + field_ + "]") + ": " + msg),
        line(line_),
        field(std::move(field_)) {}
};

}  // namespace ordrep

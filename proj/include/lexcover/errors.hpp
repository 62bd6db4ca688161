#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lexcover {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what,
             const std::string& source = {})
      : Error((source.empty() ? "" : source + ": ") + "line " +
              std::to_string(line) + ": " + what),
        line_(line),
        detail_(what) {}
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

// A construction exceeded its configured state or computation cap.
class CapOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Immersion check requested on a morphism that carries no completion.
class Unverifiable : public Error {
 public:
  using Error::Error;
};

// The bounded oracle found more than k images for some input word.
class NotKValued : public Error {
 public:
  using Error::Error;
};

// lag() on two output sequences whose Lead or Delay is zero.
class IncomparableOutputs : public Error {
 public:
  using Error::Error;
};

}  // namespace lexcover

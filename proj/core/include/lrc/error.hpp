#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lrc {

// Base of every exception thrown by the library. Messages are one line and
// meant to be shown to a user as-is.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A numeric parameter fell outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Reading or writing a stream failed. Carries the byte offset reached.
class IoError : public Error {
 public:
  IoError(const std::string& what, std::uint64_t offset);

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

}  // namespace lrc

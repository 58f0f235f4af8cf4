#pragma once

#include <stdexcept>
#include <string>

namespace ohtsuki {

/// Malformed diagram text, corpus line or command-line value.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Unreadable or malformed corpus/cache file; `line` is 1-based, 0 if unknown.
class CorpusError : public std::runtime_error {
 public:
  explicit CorpusError(const std::string& what, int line = 0)
      : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A configured bound (crossings, cable depth, state count) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cyclotomic computation ran out of r-adic precision or hit a
/// non-divisible quotient.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven identity (integrality, congruence) failed on computed values.
/// Always an implementation bug, never a property of the input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ohtsuki

#pragma once

#include <stdexcept>
#include <string>

namespace eventgraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad graph, partial labelling, coordinate mismatch.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size guard refused a combinatorially explosive request.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Parse failure in one of the text or JSON formats. Carries file and line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  int line() const { return line_; }

 private:
  std::string source_;
  int line_;
};

}  // namespace eventgraph

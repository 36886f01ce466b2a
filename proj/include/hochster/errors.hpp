#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hochster {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotBipartite : public Error {
 public:
  using Error::Error;
};

class NotConnected : public Error {
 public:
  using Error::Error;
};

class SubsetOutOfRange : public Error {
 public:
  using Error::Error;
};

class EmptySubset : public Error {
 public:
  using Error::Error;
};

class EmptyIdeal : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class TooManyVertices : public Error {
 public:
  TooManyVertices(std::size_t vertices, std::size_t cap);
  std::size_t vertices() const { return vertices_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t vertices_;
  std::size_t cap_;
};

/// Raised when an independence complex has more faces than the configured
/// cap. Carries the offending vertex subset (0-based indices of the parent).
class FaceLimitExceeded : public Error {
 public:
  FaceLimitExceeded(std::vector<std::size_t> subset, std::uint64_t cap);
  const std::vector<std::size_t>& subset() const { return subset_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::vector<std::size_t> subset_;
  std::uint64_t cap_;
};

/// Parse failure; `line` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace hochster

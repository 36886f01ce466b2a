#include "hochster/errors.hpp"

#include <sstream>

namespace hochster {

TooManyVertices::TooManyVertices(std::size_t vertices, std::size_t cap)
    : Error("graph has " + std::to_string(vertices) +
            " vertices, above the cap of " + std::to_string(cap)),
      vertices_(vertices),
      cap_(cap) {}

namespace {

std::string describe_face_limit(const std::vector<std::size_t>& subset,
                                std::uint64_t cap) {
  std::ostringstream msg;
  msg << "independence complex exceeds the face cap of " << cap
      << " on subset W = {";
  for (std::size_t k = 0; k < subset.size(); ++k)
    msg << (k ? "," : "") << subset[k] + 1;
  msg << '}';
  return msg.str();
}

}  // namespace

FaceLimitExceeded::FaceLimitExceeded(std::vector<std::size_t> subset,
                                     std::uint64_t cap)
    : Error(describe_face_limit(subset, cap)),
      subset_(std::move(subset)),
      cap_(cap) {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

}  // namespace hochster

#ifndef DIHEDRANT_ERRORS_HPP
#define DIHEDRANT_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace dihedrant {

// Malformed connection-set spec string; position is a byte offset into the
// input.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, size_t position)
      : std::runtime_error(std::move(msg)), position_(position) {}
  size_t position() const { return position_; }

private:
  size_t position_;
};

// A configured cap (search nodes, tuple-orbit size) was reached before the
// computation finished.
class ResourceLimitError : public std::runtime_error {
public:
  ResourceLimitError(std::string msg, uint64_t limit)
      : std::runtime_error(std::move(msg)), limit_(limit) {}
  uint64_t limit() const { return limit_; }

private:
  uint64_t limit_;
};

// Caps for the potentially expensive computations; defaults are generous for
// everything in the supported range of group orders.
struct Limits {
  uint64_t node_cap = 10'000'000;  // aut search tree nodes
  uint64_t arc_cap = 10'000'000;   // tuple-orbit elements for s-arc checks
};

}  // namespace dihedrant

#endif

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace d2k {

using NodeId = std::uint32_t;
using Degree = std::uint32_t;
using Count = std::uint64_t;
/// Product of two counts without overflow.
__extension__ typedef unsigned __int128 WideCount;

/// Ordered pair of node ids; the first entry is the source.
using Edge = std::pair<NodeId, NodeId>;

/// Packs an ordered node pair into one 64-bit key for hash containers.
constexpr std::uint64_t pack(NodeId a, NodeId b) noexcept {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

constexpr Edge unpack(std::uint64_t key) noexcept {
  return {static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu)};
}

/// Base of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input; `position()` is the 1-based line or record index.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("input position " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Caller violated an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The requested target has no simple realization.
class Unrealizable : public Error {
 public:
  using Error::Error;
};

/// An internal invariant broke. Signals a bug, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace d2k

#define D2K_ENSURE(cond, msg)                                                               \
  do {                                                                                      \
    if (!(cond)) {                                                                          \
      throw ::d2k::InternalError(std::string(__FILE__) + ":" + std::to_string(__LINE__) + \
                                 ": invariant failed: " #cond ": " + (msg));             \
    }                                                                                       \
  } while (false)

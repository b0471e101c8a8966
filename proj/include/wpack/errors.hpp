#pragma once

#include <stdexcept>
#include <string>

namespace wpack {

/// Filesystem-level failure (unreadable/unwritable path), distinct from
/// parse and validation errors so callers can map exit codes.
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wpack

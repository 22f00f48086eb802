#pragma once

#include <stdexcept>
#include <string>

namespace adpipe {

// Malformed or inconsistent external input (files, CLI values). Maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Violated operation precondition or internal contract. Maps to exit code 2.
class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adpipe

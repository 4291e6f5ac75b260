#ifndef PROTOLEX_ERROR_HPP
#define PROTOLEX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace protolex {

// Error categories map 1:1 onto CLI exit codes (usage=1, input=2, invariant=3).

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

class InvariantError : public std::runtime_error {
 public:
  explicit InvariantError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace protolex

#endif

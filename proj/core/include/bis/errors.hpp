#ifndef BIS_ERRORS_HPP
#define BIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bis {

// Malformed or inconsistent input (bad tables, bad JSON, undeclared variables).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded.  The message names the cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bis

#endif

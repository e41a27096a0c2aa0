#ifndef KDIAM_ERROR_HPP
#define KDIAM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kdiam {

/// Malformed or out-of-contract input (bad ids, bad files, bad parameters).
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The graph is not connected, so its diameter is infinite.
class DisconnectedGraphError : public std::runtime_error {
 public:
  DisconnectedGraphError() : std::runtime_error("infinite diameter: graph is disconnected") {}
};

/// A handle or version that does not belong to the structure it is used with.
class HandleError : public std::out_of_range {
 public:
  explicit HandleError(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace kdiam

#endif  // KDIAM_ERROR_HPP

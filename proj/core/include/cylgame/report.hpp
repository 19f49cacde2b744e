#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cylgame {

/// Outcome of a checker. A failing report names the violated condition and
/// carries the witnessing tuple (atom ids, node ids or indices, depending on
/// the checker) plus a human-readable message.
struct Report {
  bool ok = true;
  std::string condition;
  std::vector<int> witness;
  std::string message;

  static Report pass() { return {}; }
  static Report failure(std::string condition, std::vector<int> witness,
                        std::string message) {
    return {false, std::move(condition), std::move(witness), std::move(message)};
  }

  explicit operator bool() const { return ok; }
};

}  // namespace cylgame

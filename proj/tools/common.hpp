#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylgame/algebra_io.hpp"

namespace cylgame::cli {

enum Exit { kPass = 0, kNegative = 1, kUsage = 2 };

// "maddux:2", "rainbowCA:3,4,3", "orderRainbow:3,3,3", "bsl:3,2",
// "fullSet:3,3", "rainbowRA:K2,K1", a file path, or "-" for stdin
AtomStructure load_structure(const std::string& spec, std::size_t max_atoms);
bool is_builtin(const std::string& spec);

std::vector<std::string> split_list(const std::string& s, char sep = ',');
int to_int(const std::string& s, const std::string& what);

struct Output {
  bool json = false;
  std::string path;  // also written here when set
  void emit(const std::string& text) const;
};

void start_watchdog(double seconds);

}  // namespace cylgame::cli

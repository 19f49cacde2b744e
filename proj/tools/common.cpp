#include "common.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "cylgame/builders.hpp"
#include "cylgame/ef.hpp"
#include "cylgame/error.hpp"
#include "cylgame/rainbow.hpp"

namespace cylgame::cli {

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::InvalidArgument, what + ": '" + s + "' is not an integer");
}

namespace {

std::vector<int> ints(const std::string& args, std::size_t count, const std::string& name) {
  const auto parts = split_list(args);
  if (parts.size() != count)
    fail(ErrorKind::InvalidArgument, name + " takes " + std::to_string(count) + " comma-separated parameters");
  std::vector<int> out;
  for (const auto& p : parts) out.push_back(to_int(p, name));
  return out;
}

}  // namespace

bool is_builtin(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) return false;
  const std::string kind = spec.substr(0, colon);
  return kind == "maddux" || kind == "rainbowCA" || kind == "orderRainbow" || kind == "bsl" ||
         kind == "fullSet" || kind == "rainbowRA";
}

AtomStructure load_structure(const std::string& spec, std::size_t max_atoms) {
  if (is_builtin(spec)) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon), args = spec.substr(colon + 1);
    if (kind == "maddux") return maddux_E(ints(args, 1, kind)[0]);
    if (kind == "bsl") {
      const auto v = ints(args, 2, kind);
      return bsl_structure(v[0], v[1]);
    }
    if (kind == "fullSet") {
      const auto v = ints(args, 2, kind);
      return full_set_structure(v[0], v[1]);
    }
    if (kind == "rainbowCA") {
      const auto v = ints(args, 3, kind);
      RainbowParams p;
      p.n = v[0];
      for (int t = 1; t <= v[1]; ++t) p.tints.push_back(t);
      p.reds = v[2];
      p.max_atoms = max_atoms;
      return rainbow_ca(p);
    }
    if (kind == "orderRainbow") {
      const auto v = ints(args, 3, kind);
      RainbowParams p;
      p.n = v[0];
      for (int t = 0; t >= -v[1]; --t) p.tints.push_back(t);
      p.reds = v[2];
      p.rules = RuleSet::ordered();
      p.max_atoms = max_atoms;
      return rainbow_ca(p);
    }
    const auto parts = split_list(args);
    if (parts.size() != 2) fail(ErrorKind::InvalidArgument, "rainbowRA takes two structure names, e.g. rainbowRA:K2,K1");
    return rainbow_ra(structure_by_name(parts[0]), structure_by_name(parts[1]));
  }
  if (spec == "-") return parse_algebra(std::cin);
  std::ifstream in(spec);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + spec + "'");
  return parse_algebra(in);
}

void Output::emit(const std::string& text) const {
  std::cout << text;
  if (!text.empty() && text.back() != '\n') std::cout << '\n';
  std::cout.flush();
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

void start_watchdog(double seconds) {
  if (seconds <= 0) return;
  std::thread([seconds] {
    std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
    std::cerr << "cylgame: time limit of " << seconds << " s exceeded\n";
    std::_Exit(kUsage);
  }).detach();
}

}  // namespace cylgame::cli

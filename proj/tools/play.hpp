#pragma once

#include <string>

#include "cylgame/algebra_io.hpp"
#include "cylgame/game.hpp"

namespace cylgame::cli {

struct PlayOptions {
  std::string variant;  // Gmk | boldG | RA; default by structure kind
  int m = 0;
  std::string rounds = "omega";
  std::string side = "exists";
  std::string strategy;    // scripted forall for the computer
  std::string transcript;  // saved on exit, also after quit
};

// exit 0 when the human wins or quits, 1 when the human loses
int run_play(const AtomStructure& s, const PlayOptions& o, const GameLimits& lim);

}  // namespace cylgame::cli

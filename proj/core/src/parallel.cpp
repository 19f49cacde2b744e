#include "cylgame/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cylgame {

namespace {

std::atomic<int>& jobs_setting() {
  static std::atomic<int> jobs = [] {
    if (const char* env = std::getenv("CYLGAME_JOBS")) {
      try {
        const int v = std::stoi(env);
        if (v > 0) return v;
      } catch (const std::exception&) {
      }
    }
    return 1;
  }();
  return jobs;
}

}  // namespace

int default_jobs() { return jobs_setting().load(); }
void set_default_jobs(int jobs) { jobs_setting().store(jobs > 0 ? jobs : 1); }

}  // namespace cylgame

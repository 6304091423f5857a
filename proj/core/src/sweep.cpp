#include "skbrace/sweep.hpp"

#include <cstdlib>  // for getenv, strtoul
#include <thread>   // for thread

namespace skb {

  unsigned default_threads() {
    if (char const* env = std::getenv("SKBRACE_THREADS")) {
      unsigned long v = std::strtoul(env, nullptr, 10);
      if (v > 0) {
        return static_cast<unsigned>(v);
      }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }

  SweepOptions& default_sweep() {
    static SweepOptions opts;
    return opts;
  }

}  // namespace skb

#include "bohr/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace bohr {

namespace {

unsigned default_threads() {
  if (const char* env = std::getenv("BOHR_FORGE_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& limit_slot() {
  static std::atomic<unsigned> slot{default_threads()};
  return slot;
}

}  // namespace

void set_thread_limit(unsigned n) { limit_slot() = n == 0 ? default_threads() : n; }

unsigned thread_limit() { return limit_slot().load(); }

}  // namespace bohr

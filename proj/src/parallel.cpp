#include "orthospec/parallel.hpp"

#include <cstdlib>
#include <string>

namespace orthospec {

unsigned thread_count() {
  static const unsigned n = [] {
    const char* s = std::getenv("VERIFY_THREADS");
    if (!s || !*s) return 1u;
    try {
      const long v = std::stol(s);
      if (v < 1) return 1u;
      const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
      return static_cast<unsigned>(std::min<long>(v, 4L * hw));
    } catch (...) {
      return 1u;
    }
  }();
  return n;
}

}  // namespace orthospec

#include "qfl/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qfl {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QFL_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 1;
}

}  // namespace qfl

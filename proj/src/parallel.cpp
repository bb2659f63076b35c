#include "qsl/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace qsl {

std::size_t worker_count() {
  std::size_t count = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("QSLT_THREADS")) {
    std::size_t requested = 0;
    const char* end = cap + std::strlen(cap);
    auto [ptr, ec] = std::from_chars(cap, end, requested);
    if (ec == std::errc{} && ptr == end && requested > 0) count = std::min(count, requested);
  }
  return count;
}

}  // namespace qsl

#pragma once

#include <cstdlib>
#include <thread>

namespace sgca {

// Worker count for parallel sweeps: hardware concurrency capped by the
// SGCA_THREADS environment variable. Results must not depend on the count.
inline size_t worker_count(size_t work_items) {
    size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("SGCA_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1 && static_cast<size_t>(cap) < n)
            n = static_cast<size_t>(cap);
    }
    if (work_items < 256) return 1;  // not worth spawning threads
    return n;
}

}  // namespace sgca

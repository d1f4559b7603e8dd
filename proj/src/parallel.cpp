#include "sl2inv/parallel.hpp"

namespace sl2inv {

namespace {
std::atomic<unsigned> configured_workers{0};
}

bool& inside_parallel_region() {
    thread_local bool inside = false;
    return inside;
}

void set_worker_count(unsigned n) { configured_workers.store(n); }

unsigned worker_count() {
    const unsigned n = configured_workers.load();
    if (n != 0) return n;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace sl2inv

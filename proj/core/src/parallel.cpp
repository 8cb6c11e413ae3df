#include "metanerf/parallel.hpp"

#include <memory>
#include <mutex>

#include <tbb/global_control.h>
#include <tbb/parallel_for.h>

namespace metanerf {

namespace {
std::unique_ptr<tbb::global_control> g_control;
int g_limit = 0;
std::mutex g_mutex;
}  // namespace

void set_thread_limit(int n) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_limit = n;
    if (n > 0) {
        g_control = std::make_unique<tbb::global_control>(
            tbb::global_control::max_allowed_parallelism, static_cast<std::size_t>(n));
    } else {
        g_control.reset();
    }
}

int thread_limit() { return g_limit; }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    if (count == 0) return;
    if (count == 1) {
        body(0);
        return;
    }
    tbb::parallel_for(std::size_t{0}, count, [&](std::size_t i) { body(i); });
}

}  // namespace metanerf

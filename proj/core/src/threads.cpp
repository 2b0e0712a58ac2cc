#include "carpetlab/threads.hpp"

#include <cstdlib>
#include <string>
#include <thread>

namespace carpetlab {

int worker_count(int override_value) {
    if (override_value > 0) return override_value;
    if (const char* env = std::getenv("CARPETLAB_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0 && parsed < 1024)
            return static_cast<int>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace carpetlab

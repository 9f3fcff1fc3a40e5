#include "starlike/parallel.hpp"

#include <cstdlib>
#include <string>

namespace starlike {

unsigned sweep_thread_count() {
    unsigned count = std::thread::hardware_concurrency();
    if (count == 0) count = 1;
    if (const char* env = std::getenv("STARLIKE_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1 && static_cast<unsigned>(cap) < count) {
                count = static_cast<unsigned>(cap);
            }
        } catch (const std::exception&) {
            // unparsable cap: keep the hardware default
        }
    }
    return count;
}

}  // namespace starlike

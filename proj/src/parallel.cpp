#include "trisat/parallel.hpp"

#include <cstdlib>
#include <string>

namespace trisat {

int worker_count()
{
    if (const char* env = std::getenv("TRISAT_THREADS")) {
        try {
            std::size_t used = 0;
            int v = std::stoi(env, &used);
            if (used == std::string(env).size() && v >= 1)
                return v;
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace trisat

#include "rstk/app/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "rstk/errors.hpp"

namespace rstk::app {

int worker_count()
{
    int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("RS_TOOLKIT_THREADS"); env && *env) {
        std::size_t pos = 0;
        int cap = 0;
        try {
            cap = std::stoi(env, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != std::string(env).size() || cap < 1)
            throw ConfigError("RS_TOOLKIT_THREADS must be a positive integer");
        n = std::min(n, cap);
    }
    return n;
}

}  // namespace rstk::app

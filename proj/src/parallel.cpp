#include "weakid/parallel.hpp"

#include <cstdlib>
#include <string>

namespace weakid {

namespace {
std::atomic<unsigned> g_workers{0};
}

unsigned workers()
{
    if (unsigned w = g_workers.load())
        return w;
    if (const char* env = std::getenv("WEAKID_WORKERS")) {
        try {
            const int v = std::stoi(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

void set_workers(unsigned n) { g_workers.store(n); }

} // namespace weakid

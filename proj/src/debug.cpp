#include "psep/debug.hpp"

#include <cstdlib>
#include <cstring>

namespace psep {

namespace {

int g_state = -1;  // -1 = consult environment, 0 = off, 1 = on

bool env_enabled() {
    const char* v = std::getenv("PSEP_DEBUG_ASSERT");
    return v != nullptr && std::strcmp(v, "1") == 0;
}

}  // namespace

bool debug_checks_enabled() {
    if (g_state >= 0) return g_state == 1;
    static const bool from_env = env_enabled();
    return from_env;
}

void set_debug_checks(bool on) { g_state = on ? 1 : 0; }

}  // namespace psep

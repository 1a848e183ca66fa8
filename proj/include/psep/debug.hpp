#pragma once

namespace psep {

// Expensive structural self-checks (base properties, hierarchy shape, star
// packings) run only when enabled. Enabled by the PSEP_DEBUG_ASSERT=1
// environment variable or programmatically via set_debug_checks.
bool debug_checks_enabled();
void set_debug_checks(bool on);

}  // namespace psep

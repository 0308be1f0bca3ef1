#pragma once

#include <string_view>

namespace fsp {

/// Sets the diagnostic level from FSP_LOG (error, info or debug; default error).
/// Diagnostics go to stderr so they never mix with command output.
void InitLoggingFromEnv();
/// Same, from an explicit level name. Throws std::invalid_argument on an unknown name.
void SetLogLevel(std::string_view level);

}  // namespace fsp

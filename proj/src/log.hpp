#pragma once

// Library-internal logging; spdlog stays out of the public headers.
#include <spdlog/spdlog.h>

namespace fsp::log {

/// Library logger, created on first use at error level.
spdlog::logger& Logger();

template <typename... Args>
void Info(fmt::format_string<Args...> fmt, Args&&... args) {
  Logger().info(fmt, std::forward<Args>(args)...);
}

template <typename... Args>
void Debug(fmt::format_string<Args...> fmt, Args&&... args) {
  Logger().debug(fmt, std::forward<Args>(args)...);
}

template <typename... Args>
void Warn(fmt::format_string<Args...> fmt, Args&&... args) {
  Logger().warn(fmt, std::forward<Args>(args)...);
}

}  // namespace fsp::log

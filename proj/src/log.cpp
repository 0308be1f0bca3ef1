#include "log.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include <spdlog/sinks/stdout_sinks.h>

#include "fsp/logging.hpp"

namespace fsp {

spdlog::logger& log::Logger() {
  static const std::shared_ptr<spdlog::logger> logger = [] {
    auto l = spdlog::stderr_logger_mt("fsp");
    l->set_pattern("[%l] %v");
    l->set_level(spdlog::level::err);
    return l;
  }();
  return *logger;
}

void SetLogLevel(std::string_view level) {
  if (level == "error") {
    log::Logger().set_level(spdlog::level::err);
  } else if (level == "info") {
    log::Logger().set_level(spdlog::level::info);
  } else if (level == "debug") {
    log::Logger().set_level(spdlog::level::debug);
  } else {
    throw std::invalid_argument("unknown log level \"" + std::string(level) + "\" (use error, info or debug)");
  }
}

void InitLoggingFromEnv() {
  const char* value = std::getenv("FSP_LOG");
  SetLogLevel(value && *value ? value : "error");
}

}  // namespace fsp

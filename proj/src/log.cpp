#include "corrkernel/log.hpp"

#include <cstdlib>
#include <iostream>

namespace corrkernel {

LogLevel log_level() {
  static const LogLevel level = [] {
    const char* env = std::getenv("CORRKERNEL_LOG");
    if (env == nullptr) return LogLevel::kError;
    const std::string value(env);
    if (value == "debug") return LogLevel::kDebug;
    if (value == "info") return LogLevel::kInfo;
    return LogLevel::kError;
  }();
  return level;
}

void log_error(const std::string& message) { std::cerr << "[error] " << message << "\n"; }

void log_info(const std::string& message) {
  if (log_level() >= LogLevel::kInfo) std::cerr << "[info] " << message << "\n";
}

void log_debug(const std::string& message) {
  if (log_level() >= LogLevel::kDebug) std::cerr << "[debug] " << message << "\n";
}

}  // namespace corrkernel

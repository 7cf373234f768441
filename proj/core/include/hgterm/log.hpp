#pragma once

#include <functional>
#include <string>

namespace hgterm {

enum class LogLevel { quiet = 0, warning = 1, info = 2, debug = 3 };

/// Process-wide threshold; messages above it are discarded. Defaults to warning.
void set_log_level(LogLevel level);
LogLevel log_level();

/// Replaces the sink (stderr by default). Pass an empty function to restore it.
void set_log_sink(std::function<void(LogLevel, const std::string&)> sink);

void log(LogLevel level, const std::string& message);
inline void log_warning(const std::string& m) { log(LogLevel::warning, m); }
inline void log_info(const std::string& m) { log(LogLevel::info, m); }

}  // namespace hgterm

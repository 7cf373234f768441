#include "hgterm/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace hgterm {

namespace {

std::atomic<LogLevel> g_level{LogLevel::warning};
std::mutex g_mutex;
std::function<void(LogLevel, const std::string&)> g_sink;

const char* tag(LogLevel level) {
  switch (level) {
    case LogLevel::warning:
      return "warning";
    case LogLevel::info:
      return "info";
    case LogLevel::debug:
      return "debug";
    default:
      return "";
  }
}

}  // namespace

void set_log_level(LogLevel level) { g_level = level; }
LogLevel log_level() { return g_level; }

void set_log_sink(std::function<void(LogLevel, const std::string&)> sink) {
  std::lock_guard lock(g_mutex);
  g_sink = std::move(sink);
}

void log(LogLevel level, const std::string& message) {
  if (level == LogLevel::quiet || level > g_level.load()) return;
  std::lock_guard lock(g_mutex);
  if (g_sink) {
    g_sink(level, message);
  } else {
    std::cerr << "hgterm " << tag(level) << ": " << message << '\n';
  }
}

}  // namespace hgterm

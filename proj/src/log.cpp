#include "tnet/log.hpp"

#include <iostream>
#include <mutex>

namespace tnet {

namespace {

std::mutex g_mutex;
int g_default_count = 0;
constexpr int kDefaultLimit = 20;

WarningSink& sink() {
  static WarningSink s;
  return s;
}

}  // namespace

void set_warning_sink(WarningSink s) {
  std::lock_guard<std::mutex> lock(g_mutex);
  sink() = std::move(s);
}

void warn(const std::string& message) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (sink()) {
    sink()(message);
    return;
  }
  // The default sink stops after a few lines so long runs stay readable.
  if (g_default_count < kDefaultLimit) std::cerr << "warning: " << message << '\n';
  if (++g_default_count == kDefaultLimit) std::cerr << "warning: further warnings suppressed\n";
}

}  // namespace tnet

#pragma once

#include <functional>
#include <string>

namespace tnet {

// Soft diagnostics (large stretches, exponential underflow). The default sink
// writes to stderr; callers and tests may install their own.
using WarningSink = std::function<void(const std::string&)>;

void set_warning_sink(WarningSink sink);
void warn(const std::string& message);

}  // namespace tnet

/*
   Copyright 2026 The vakh authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <cstdlib>
#include <iostream>
#include <string>
#include <string_view>

namespace vakh::log {

enum class Level { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// VAKH_LOG=error|warn|info|debug, default warn.
inline Level threshold() {
  static const Level level = [] {
    const char* env = std::getenv("VAKH_LOG");
    if (env == nullptr) return Level::kWarn;
    const std::string_view s(env);
    if (s == "error") return Level::kError;
    if (s == "info") return Level::kInfo;
    if (s == "debug") return Level::kDebug;
    return Level::kWarn;
  }();
  return level;
}

inline void write(Level level, std::string_view msg) {
  if (static_cast<int>(level) > static_cast<int>(threshold())) return;
  static constexpr const char* kTags[] = {"error", "warn", "info", "debug"};
  std::cerr << "[vakh:" << kTags[static_cast<int>(level)] << "] " << msg << '\n';
}

inline void error(std::string_view msg) { write(Level::kError, msg); }
inline void warn(std::string_view msg) { write(Level::kWarn, msg); }
inline void info(std::string_view msg) { write(Level::kInfo, msg); }
inline void debug(std::string_view msg) { write(Level::kDebug, msg); }

}  // namespace vakh::log

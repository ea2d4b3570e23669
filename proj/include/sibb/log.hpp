#pragma once

#include <atomic>
#include <iostream>
#include <string>

namespace sibb::log {

inline std::atomic<bool>& quiet_flag() {
  static std::atomic<bool> quiet{false};
  return quiet;
}

inline void set_quiet(bool q) { quiet_flag().store(q); }

inline void warn(const std::string& msg) {
  if (!quiet_flag().load()) std::cerr << "[sibb] warning: " << msg << '\n';
}

inline void progress(const std::string& msg) {
  if (!quiet_flag().load()) std::cerr << "[sibb] " << msg << '\n';
}

}  // namespace sibb::log

#pragma once

#include <cstdlib>
#include <iostream>
#include <sstream>

namespace monopath {

/* Verbosity from MONOPATH_LOG: 0/unset = quiet, 1 = info, 2 = debug. */
inline int log_level() {
  static int lvl = [] {
    const char* s = std::getenv("MONOPATH_LOG");
    return s ? std::atoi(s) : 0;
  }();
  return lvl;
}

template <typename... Args>
void log_info(Args&&... args) {
  if (log_level() < 1) return;
  std::ostringstream os;
  (os << ... << args);
  std::cerr << "[monopath] " << os.str() << "\n";
}

template <typename... Args>
void log_debug(Args&&... args) {
  if (log_level() < 2) return;
  std::ostringstream os;
  (os << ... << args);
  std::cerr << "[monopath] " << os.str() << "\n";
}

} // namespace monopath

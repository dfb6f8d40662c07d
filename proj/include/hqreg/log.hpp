#pragma once

#include <iostream>
#include <string_view>

namespace hqreg {

inline void warn(std::string_view msg) {
  std::cerr << "[hqreg] warning: " << msg << "\n";
}

}  // namespace hqreg

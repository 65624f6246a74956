#pragma once

#include <cstdint>
#include <vector>

#include "pebbling/configuration.hpp"

namespace pebbling::detail {

struct CountsHash {
  std::size_t operator()(const std::vector<Count>& counts) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ counts.size();
    for (Count c : counts) {
      std::uint64_t x = static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      x ^= x >> 31;
      x *= 0xbf58476d1ce4e5b9ull;
      h ^= x;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace pebbling::detail

#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "latkit/element_set.hpp"

namespace latkit::detail {

struct LatticeData {
  std::size_t n = 0;
  Index bot = 0;
  Index top = 0;
  std::vector<std::uint8_t> leq;
  std::vector<std::uint8_t> join;
  std::vector<std::uint8_t> meet;
  std::vector<std::uint8_t> mul;
  std::vector<ElementSet> up;
  std::vector<ElementSet> down;
  std::vector<std::string> names;
  std::string label;
};

/// Per-lattice cache. Values are computed outside the lock and published
/// only if the slot is still empty, so concurrent callers agree. A filled
/// slot is never written again, which makes the returned references stable.
struct LatticeMemo {
  static constexpr std::size_t kClassSlots = 16;

  std::mutex mutex;
  std::array<std::optional<ElementSet>, kClassSlots> classes;
  std::optional<std::vector<Index>> radicals;

  template <typename F>
  const ElementSet& class_set(std::size_t slot, F&& compute) {
    {
      std::lock_guard lock(mutex);
      if (classes[slot]) return *classes[slot];
    }
    ElementSet value = compute();
    std::lock_guard lock(mutex);
    if (!classes[slot]) classes[slot] = value;
    return *classes[slot];
  }

  template <typename F>
  const std::vector<Index>& radical_table(F&& compute) {
    {
      std::lock_guard lock(mutex);
      if (radicals) return *radicals;
    }
    std::vector<Index> value = compute();
    std::lock_guard lock(mutex);
    if (!radicals) radicals = std::move(value);
    return *radicals;
  }
};

}  // namespace latkit::detail

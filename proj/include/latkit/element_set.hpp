#pragma once

#include <array>
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace latkit {

using Index = std::size_t;

/// Fixed-width bit vector over carrier indices. Every lattice handled by the
/// toolkit has at most kCapacity elements, so a set fits in two machine words
/// and set algebra is a handful of word operations.
class ElementSet {
 public:
  static constexpr std::size_t kCapacity = 128;

  ElementSet() = default;
  ElementSet(std::initializer_list<Index> members) {
    for (Index i : members) insert(i);
  }

  static ElementSet from_indices(std::span<const Index> members) {
    ElementSet s;
    for (Index i : members) s.insert(i);
    return s;
  }

  /// {0, ..., n-1}
  static ElementSet first_n(std::size_t n) {
    assert(n <= kCapacity);
    ElementSet s;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::size_t lo = w * 64;
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  bool contains(Index i) const {
    return i < kCapacity && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void insert(Index i) {
    assert(i < kCapacity);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void erase(Index i) {
    assert(i < kCapacity);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  std::optional<Index> first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0)
        return w * 64 + static_cast<Index>(std::countr_zero(words_[w]));
    return std::nullopt;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto b = static_cast<Index>(std::countr_zero(bits));
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<Index> indices() const {
    std::vector<Index> out;
    out.reserve(count());
    for_each([&](Index i) { out.push_back(i); });
    return out;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Total order used for deterministic output: smaller sets first, then by
  /// lowest differing member.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff == 0) continue;
      const std::uint64_t low = diff & (~diff + 1);
      return (a.words_[w] & low) != 0 ? std::strong_ordering::less
                                      : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  static constexpr std::size_t kWords = kCapacity / 64;
  std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace latkit

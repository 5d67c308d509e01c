#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace boardless {

/// Fixed-width bitset sized at runtime; one bit per site.
class ChunkSet {
 public:
  ChunkSet() = default;
  explicit ChunkSet(std::size_t bits, bool value = false) { resize(bits, value); }

  std::size_t size() const { return bits_; }

  void resize(std::size_t bits, bool value = false) {
    bits_ = bits;
    words_.assign((bits + 63) / 64, value ? ~std::uint64_t{0} : 0);
    trim();
  }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  /// Index of the k-th set bit (0-based); size() when there are fewer.
  std::size_t nth(std::size_t k) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      const auto pc = static_cast<std::size_t>(std::popcount(w));
      if (k >= pc) {
        k -= pc;
        continue;
      }
      while (k-- > 0) w &= w - 1;
      return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
    }
    return bits_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        f((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  friend bool operator==(const ChunkSet&, const ChunkSet&) = default;

 private:
  void trim() {
    if (bits_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
  }

  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace boardless

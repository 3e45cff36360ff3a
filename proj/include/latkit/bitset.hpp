#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace latkit {

/// Fixed-size bitset whose size is chosen at runtime.
///
/// Rows of order matrices and subsets of lattice elements are stored this
/// way; the word-level operations keep closure, subset and first/last
/// element queries at O(n/64).
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  bool operator[](std::size_t i) const noexcept { return test(i); }

  Bitset& set(std::size_t i) noexcept {
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    return *this;
  }
  Bitset& reset(std::size_t i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    return *this;
  }
  Bitset& set_all() noexcept {
    for (auto& w : words_) w = ~std::uint64_t{0};
    trim();
    return *this;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w != 0) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  bool is_subset_of(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~other.words_[k]) != 0) return false;
    return true;
  }
  bool intersects(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k]) != 0) return true;
    return false;
  }

  std::size_t find_first() const noexcept { return find_from_word(0); }

  /// First index set in both this and other.
  std::size_t find_first_common(const Bitset& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (auto w = words_[k] & other.words_[k]; w != 0)
        return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
    return npos;
  }
  std::size_t find_last_common(const Bitset& other) const noexcept {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (auto w = words_[k] & other.words_[k]; w != 0)
        return (k << 6) + 63 - static_cast<std::size_t>(std::countl_zero(w));
    return npos;
  }
  /// (this & other) is a subset of bound.
  bool common_subset_of(const Bitset& other, const Bitset& bound) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & other.words_[k] & ~bound.words_[k]) != 0) return false;
    return true;
  }

  std::size_t find_next(std::size_t i) const noexcept {
    ++i;
    if (i >= size_) return npos;
    std::size_t k = i >> 6;
    std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
    if (w != 0) return (k << 6) + static_cast<std::size_t>(std::countr_zero(w));
    return find_from_word(k + 1);
  }

  std::size_t find_last() const noexcept {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k] != 0)
        return (k << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
    return npos;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        f((k << 6) + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  /// Set difference.
  Bitset& operator-=(const Bitset& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) noexcept { return a ^= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a -= b; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t find_from_word(std::size_t k) const noexcept {
    for (; k < words_.size(); ++k)
      if (words_[k] != 0) return (k << 6) + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return npos;
  }
  void trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace latkit

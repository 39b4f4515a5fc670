#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace regcl {

inline constexpr int kMaxElements = 128;

// Subset of {0, ..., kMaxElements-1}, packed into two machine words.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> members) {
    for (int i : members) insert(i);
  }

  static ElementSet full(int n) {
    ElementSet s;
    for (int k = 0; k < 2; ++k) {
      int lo = 64 * k;
      if (n >= lo + 64) s.w_[k] = ~uint64_t{0};
      else if (n > lo) s.w_[k] = (uint64_t{1} << (n - lo)) - 1;
    }
    return s;
  }
  static ElementSet singleton(int i) {
    ElementSet s;
    s.insert(i);
    return s;
  }
  static ElementSet from_words(uint64_t lo, uint64_t hi) {
    ElementSet s;
    s.w_ = {lo, hi};
    return s;
  }

  bool contains(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void insert(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void erase(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }
  bool empty() const { return (w_[0] | w_[1]) == 0; }
  bool subset_of(const ElementSet& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  bool intersects(const ElementSet& o) const {
    return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
  }
  // Complement relative to {0, ..., n-1}.
  ElementSet complement(int n) const { return full(n) - *this; }

  int first() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }
  int last() const {
    if (w_[1]) return 127 - std::countl_zero(w_[1]);
    if (w_[0]) return 63 - std::countl_zero(w_[0]);
    return -1;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int k = 0; k < 2; ++k) {
      uint64_t w = w_[k];
      while (w) {
        f(64 * k + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }
  std::vector<int> members() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  uint64_t word(int k) const { return w_[k]; }

  ElementSet& operator|=(const ElementSet& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    w_[0] &= ~o.w_[0];
    w_[1] &= ~o.w_[1];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  // Canonical order: by cardinality, then colexicographic on indices.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    if (auto c = a.w_[1] <=> b.w_[1]; c != 0) return c;
    return a.w_[0] <=> b.w_[0];
  }

  std::size_t hash() const {
    uint64_t h = w_[0] * 0x9E3779B97F4A7C15ull;
    h ^= (w_[1] + 0x632BE59BD9B4E019ull) * 0xC2B2AE3D27D4EB4Full;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

 private:
  std::array<uint64_t, 2> w_{};
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace regcl

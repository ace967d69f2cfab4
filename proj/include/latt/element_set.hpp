#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace latt {

// Dynamic bitset over the elements 0..n-1 of a host lattice.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int n) : n_(n), w_((n + 63) / 64, 0) {}
  ElementSet(int n, std::initializer_list<int> xs) : ElementSet(n) {
    for (int x : xs) insert(x);
  }

  static ElementSet full(int n) {
    ElementSet s(n);
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  int universe() const noexcept { return n_; }
  bool contains(int x) const noexcept { return (w_[x >> 6] >> (x & 63)) & 1u; }
  void insert(int x) noexcept { w_[x >> 6] |= uint64_t{1} << (x & 63); }
  void erase(int x) noexcept { w_[x >> 6] &= ~(uint64_t{1} << (x & 63)); }
  bool empty() const noexcept {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  int count() const noexcept {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }
  bool subset_of(const ElementSet& o) const noexcept {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  ElementSet operator|(const ElementSet& o) const {
    ElementSet r = *this;
    r |= o;
    return r;
  }
  ElementSet operator&(const ElementSet& o) const {
    ElementSet r = *this;
    r &= o;
    return r;
  }
  ElementSet minus(const ElementSet& o) const {
    ElementSet r = *this;
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }
  bool operator==(const ElementSet& o) const = default;
  auto operator<=>(const ElementSet& o) const = default;

  const std::vector<uint64_t>& words() const noexcept { return w_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace latt

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latt/element_set.hpp"
#include "latt/error.hpp"

namespace latt {

// Square boolean matrix; row x holds the y with x R y.
class BoolMatrix {
 public:
  BoolMatrix() = default;
  explicit BoolMatrix(int n) : n_(n), wpr_((n + 63) / 64), bits_(size_t(n) * wpr_, 0) {}
  int size() const noexcept { return n_; }
  bool get(int x, int y) const noexcept {
    return (bits_[size_t(x) * wpr_ + (y >> 6)] >> (y & 63)) & 1u;
  }
  void set(int x, int y, bool v = true) noexcept {
    auto& w = bits_[size_t(x) * wpr_ + (y >> 6)];
    if (v)
      w |= uint64_t{1} << (y & 63);
    else
      w &= ~(uint64_t{1} << (y & 63));
  }
  const uint64_t* row(int x) const noexcept { return bits_.data() + size_t(x) * wpr_; }
  uint64_t* row(int x) noexcept { return bits_.data() + size_t(x) * wpr_; }
  int words_per_row() const noexcept { return wpr_; }
  bool operator==(const BoolMatrix&) const = default;

 private:
  int n_ = 0;
  int wpr_ = 0;
  std::vector<uint64_t> bits_;
};

// Bounded lattice on the elements 0..n-1. Immutable once built.
class FiniteLattice {
 public:
  static constexpr int kMaxSize = 4096;

  FiniteLattice() = default;

  // Builds a lattice from a candidate order matrix (leq.get(x,y) means x <= y).
  static FiniteLattice validate(const BoolMatrix& leq);
  // Builds from a cover list; the order is the reflexive-transitive closure.
  static FiniteLattice from_covers(int n, const std::vector<std::pair<int, int>>& covers);

  int size() const noexcept { return n_; }
  bool leq(int a, int b) const noexcept { return up_.get(a, b); }
  bool lt(int a, int b) const noexcept { return a != b && up_.get(a, b); }
  bool comparable(int a, int b) const noexcept { return leq(a, b) || leq(b, a); }
  int meet(int a, int b) const noexcept { return meet_[size_t(a) * n_ + b]; }
  int join(int a, int b) const noexcept { return join_[size_t(a) * n_ + b]; }
  int bottom() const noexcept { return bot_; }
  int top() const noexcept { return top_; }

  const std::vector<int>& lower_covers(int x) const noexcept { return lower_[x]; }
  const std::vector<int>& upper_covers(int x) const noexcept { return upper_[x]; }
  bool covers(int a, int b) const;  // a is covered by b
  // Length of the longest chain from bottom to x, and from x to top.
  int height(int x) const noexcept { return height_[x]; }
  int depth(int x) const noexcept { return depth_[x]; }
  // Elements in an order compatible with <= (bottom first).
  const std::vector<int>& linear_extension() const noexcept { return linext_; }

  const BoolMatrix& up_matrix() const noexcept { return up_; }      // row x = [x)
  const BoolMatrix& down_matrix() const noexcept { return down_; }  // row x = (x]

  ElementSet principal_ideal(int x) const;
  ElementSet principal_filter(int x) const;

  bool operator==(const FiniteLattice& o) const { return n_ == o.n_ && up_ == o.up_; }

 private:
  int n_ = 0;
  BoolMatrix up_, down_;
  std::vector<int> meet_, join_;
  int bot_ = 0, top_ = 0;
  std::vector<std::vector<int>> lower_, upper_;
  std::vector<int> height_, depth_, linext_;
};

std::vector<std::pair<int, int>> covers(const FiniteLattice& L);

ElementSet join_irreducibles(const FiniteLattice& L);
ElementSet meet_irreducibles(const FiniteLattice& L);
ElementSet atoms(const FiniteLattice& L);
ElementSet coatoms(const FiniteLattice& L);

FiniteLattice dual(const FiniteLattice& L);

// Sublattice [a,b]; `index_map` (if given) receives the host index of each new element.
FiniteLattice interval(const FiniteLattice& L, int a, int b, std::vector<int>* index_map = nullptr);

// Lattice on a subset of L's elements with the induced order (must be a lattice).
FiniteLattice induced(const FiniteLattice& L, const std::vector<int>& elems);

// perm[old] = new.
FiniteLattice relabel(const FiniteLattice& L, const std::vector<int>& perm);

// Witness bijection f: L -> M with x <= y iff f(x) <= f(y), or none.
std::optional<std::vector<int>> are_isomorphic(const FiniteLattice& L, const FiniteLattice& M);
bool is_isomorphism(const FiniteLattice& L, const FiniteLattice& M, const std::vector<int>& f);

struct CanonicalForm {
  std::vector<int> perm;        // perm[old] = canonical index
  std::vector<uint64_t> cert;   // order matrix in canonical indexing
};
CanonicalForm canonical_form(const FiniteLattice& L);
FiniteLattice canonical_lattice(const FiniteLattice& L);

// Human labels: 0, a1..a_{n-2}, 1 by height then index.
std::vector<std::string> element_labels(const FiniteLattice& L);

std::string to_json(const FiniteLattice& L);
FiniteLattice lattice_from_json(const std::string& text);
std::string to_dot(const FiniteLattice& L, const std::vector<std::string>* labels = nullptr);

}  // namespace latt

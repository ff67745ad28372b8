#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "cdom/error.hpp"

namespace cdom {

inline constexpr int kMaxVertices = 64;

// Subset of {0, ..., universe-1} stored as a single 64-bit word.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : universe_(checked_universe(universe)) {}

  VertexSet(int universe, std::uint64_t bits) : universe_(checked_universe(universe)), bits_(bits) {
    if ((bits_ & ~full_mask(universe_)) != 0) {
      throw DomainError("vertex set has a bit outside its universe");
    }
  }

  VertexSet(int universe, std::initializer_list<int> vertices) : VertexSet(universe) {
    for (int v : vertices) insert(v);
  }

  static VertexSet full(int universe) { return VertexSet(universe, full_mask(universe)); }

  static VertexSet from_list(int universe, const std::vector<int>& vertices) {
    VertexSet s(universe);
    for (int v : vertices) s.insert(v);
    return s;
  }

  int universe() const noexcept { return universe_; }
  std::uint64_t bits() const noexcept { return bits_; }
  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(int v) const noexcept {
    return v >= 0 && v < universe_ && ((bits_ >> v) & 1U) != 0;
  }

  void insert(int v) {
    check_index(v);
    bits_ |= std::uint64_t{1} << v;
  }

  void erase(int v) {
    check_index(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  // Smallest member; -1 when empty.
  int first() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  bool is_subset_of(const VertexSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  VertexSet operator|(const VertexSet& o) const { return {universe_, bits_ | o.bits_}; }
  VertexSet operator&(const VertexSet& o) const { return {universe_, bits_ & o.bits_}; }
  VertexSet operator-(const VertexSet& o) const { return {universe_, bits_ & ~o.bits_}; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  static std::uint64_t full_mask(int universe) noexcept {
    return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
  }

 private:
  static int checked_universe(int universe) {
    if (universe < 0 || universe > kMaxVertices) {
      throw DomainError("vertex set universe must lie in [0, 64]");
    }
    return universe;
  }

  void check_index(int v) const {
    if (v < 0 || v >= universe_) throw DomainError("vertex index outside the vertex set universe");
  }

  int universe_ = 0;
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted vertex lists of two sets.
inline bool lex_less(const VertexSet& a, const VertexSet& b) noexcept {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int t = std::countr_zero(diff);
  const std::uint64_t above = ~std::uint64_t{0} << t;
  if (((a.bits() >> t) & 1U) != 0) {
    // a continues with t; b continues with something larger or has ended.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

}  // namespace cdom

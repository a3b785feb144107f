#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "kef/errors.hpp"

namespace kef {

using Vertex = int;

/// Hard limit on graph order; every vertex set is a single machine word.
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids in [0, 64), stored as one 64-bit word.
///
/// Iteration visits members in ascending order. Ordering (`operator<`) is
/// lexicographic on the ascending member sequence, which is the order used
/// for every deterministic family listing in the library.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_members(const std::vector<Vertex>& members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }

  /// {0, ..., n-1}.
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const {
    return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U) != 0;
  }
  /// Lowest member; undefined on the empty set.
  constexpr Vertex front() const { return std::countr_zero(bits_); }

  void insert(Vertex v) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex id out of range: " + std::to_string(v));
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(Vertex v) {
    if (v >= 0 && v < kMaxVertices) bits_ &= ~(std::uint64_t{1} << v);
  }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// True iff every member is below n.
  constexpr bool fits(int n) const { return is_subset_of(range(n)); }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> members() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }

  /// Lexicographic comparison of the ascending member lists.
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_;
    std::uint64_t y = b.bits_;
    while (x != 0 && y != 0) {
      const int lx = std::countr_zero(x);
      const int ly = std::countr_zero(y);
      if (lx != ly) return lx < ly ? std::strong_ordering::less : std::strong_ordering::greater;
      x &= x - 1;
      y &= y - 1;
    }
    if (x == y) return std::strong_ordering::equal;
    return x == 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  VertexSet ends() const { return VertexSet::single(u) | VertexSet::single(v); }
  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> edges) : edges_(edges) { normalize(); }
  explicit EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) { normalize(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  /// Union of endpoints.
  VertexSet vertices() const {
    VertexSet s;
    for (const Edge& e : edges_) s |= e.ends();
    return s;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
  friend auto operator<=>(const EdgeSet& a, const EdgeSet& b) { return a.edges_ <=> b.edges_; }

 private:
  void normalize() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  std::vector<Edge> edges_;
};

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace kef

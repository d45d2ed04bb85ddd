#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace sqroot {

using Vertex = std::size_t;

// Subset of 0..n-1 stored as a fixed-width flag row. All binary operations
// require both operands to share the same universe size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe) {
    for (Vertex v : members) bits_.set(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
  }

  template <class Range>
  static VertexSet of(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (Vertex v : members) s.bits_.set(v);
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const { return bits_.test(v); }
  void insert(Vertex v) { bits_.set(v); }
  void erase(Vertex v) { bits_.reset(v); }

  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }
  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }

  // Smallest member, or universe() when empty.
  Vertex first() const {
    auto pos = bits_.find_first();
    return pos == Bits::npos ? universe() : pos;
  }
  // Smallest member greater than v, or universe() when none.
  Vertex next(Vertex v) const {
    auto pos = bits_.find_next(v);
    return pos == Bits::npos ? universe() : pos;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (auto pos = bits_.find_first(); pos != Bits::npos; pos = bits_.find_next(pos)) fn(Vertex{pos});
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  // Lexicographic order on the ascending member lists; a proper prefix sorts first.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    Vertex x = a.first();
    Vertex y = b.first();
    const std::size_t na = a.universe();
    const std::size_t nb = b.universe();
    while (x != na && y != nb) {
      if (x != y) return x <=> y;
      x = a.next(x);
      y = b.next(y);
    }
    if (x == na && y == nb) return std::strong_ordering::equal;
    return x == na ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

}  // namespace sqroot

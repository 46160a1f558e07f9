#ifndef EPIGRAPH_NODE_SET_H_
#define EPIGRAPH_NODE_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace epigraph {

inline constexpr int kMaxVertices = 64;

// A bag of vertices over ids 0..63 packed into one machine word.
//
// NodeSet carries no vertex count; callers that need "only bits < n are
// set" check it against the owning graph (see Graph::contains).
class NodeSet {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    uint64_t rest_ = 0;
  };

  constexpr NodeSet() = default;
  static constexpr NodeSet FromMask(uint64_t mask) { return NodeSet(mask); }
  static constexpr NodeSet Full(int n) {
    return NodeSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }
  static constexpr NodeSet Singleton(int v) { return NodeSet(uint64_t{1} << v); }
  static constexpr NodeSet Of(std::initializer_list<int> vertices) {
    uint64_t m = 0;
    for (int v : vertices) m |= uint64_t{1} << v;
    return NodeSet(m);
  }

  constexpr uint64_t mask() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool subset_of(NodeSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  // Lowest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }

  // A+v and A-v. Adding a present vertex or removing an absent one is a
  // no-op on the bits.
  constexpr NodeSet with(int v) const { return NodeSet(bits_ | (uint64_t{1} << v)); }
  constexpr NodeSet without(int v) const {
    return NodeSet(bits_ & ~(uint64_t{1} << v));
  }

  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  // Set difference A \ B.
  constexpr NodeSet operator-(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  // Symmetric difference.
  constexpr NodeSet operator^(NodeSet o) const { return NodeSet(bits_ ^ o.bits_); }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  constexpr auto operator<=>(const NodeSet&) const = default;

 private:
  constexpr explicit NodeSet(uint64_t bits) : bits_(bits) {}
  uint64_t bits_ = 0;
};

// "[0,2,5]"; the empty bag is "[]".
std::string to_string(NodeSet set);

// Accepts "[0,2,5]", "0,2,5", "[]" and surrounding whitespace.
NodeSet parse_node_set(std::string_view text);

std::vector<int> to_vector(NodeSet set);

}  // namespace epigraph

#endif  // EPIGRAPH_NODE_SET_H_

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mesostab {

/// Vertices are 0-based internally; file formats and reports use 1-based labels.
using Vertex = std::size_t;

/// Sorted set of distinct vertices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vertices);
  explicit VertexSet(std::vector<Vertex> vertices);

  /// Bit i of `mask` selects vertex i.
  static VertexSet from_mask(std::uint64_t mask);
  static VertexSet range(Vertex first, Vertex last);  // [first, last)

  std::uint64_t mask() const;

  bool contains(Vertex v) const;
  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }
  std::span<const Vertex> view() const noexcept { return vertices_; }
  Vertex max() const { return vertices_.back(); }

  /// Vertices of {0..n-1} not in this set.
  VertexSet complement(std::size_t n) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// Calls f(S) for every subset S of `ground` (including the empty set), in
/// increasing order of the subset's bitmask relative to `ground`.
template <typename F>
void for_each_subset(const VertexSet& ground, F&& f) {
  const std::size_t k = ground.size();
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t m = 0; m < count; ++m) {
    std::vector<Vertex> pick;
    for (std::size_t b = 0; b < k; ++b) {
      if (m >> b & 1U) pick.push_back(ground[b]);
    }
    f(VertexSet(std::move(pick)));
  }
}

}  // namespace mesostab

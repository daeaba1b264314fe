#include "mesostab/vertex_set.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace mesostab {

VertexSet::VertexSet(std::initializer_list<Vertex> vertices)
    : VertexSet(std::vector<Vertex>(vertices)) {}

VertexSet::VertexSet(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  VertexSet s;
  s.vertices_ = std::move(out);
  return s;
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  for (Vertex v = first; v < last; ++v) s.vertices_.push_back(v);
  return s;
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : vertices_) {
    if (v >= 64) throw std::out_of_range("VertexSet::mask: vertex index >= 64");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

VertexSet VertexSet::complement(std::size_t n) const {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v) {
    if (!contains(v)) s.vertices_.push_back(v);
  }
  return s;
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet s;
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(s.vertices_));
  return s;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  VertexSet s;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(s.vertices_));
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.begin(), other.end(), begin(), end());
}

}  // namespace mesostab

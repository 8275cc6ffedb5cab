#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#ifdef EDGECOLOR_ORDERED_MAPS
#include <map>
#else
#include <absl/container/flat_hash_map.h>
#endif

#include "edgecolor/types.hpp"

namespace edgecolor {

// Per-vertex color range [0, capacity(v)) used for dense storage.
struct VertexLayout {
  std::vector<int> offsets;  // n + 1 prefix sums of capacities
  std::vector<int> word_offsets;  // n + 1 prefix sums of ceil(capacity / 64)

  int capacity(Vertex v) const { return offsets[v + 1] - offsets[v]; }
  int words(Vertex v) const { return word_offsets[v + 1] - word_offsets[v]; }
  int num_vertices() const { return static_cast<int>(offsets.size()) - 1; }

  static VertexLayout from_capacities(const std::vector<int>& capacity) {
    VertexLayout layout;
    layout.offsets.assign(capacity.size() + 1, 0);
    layout.word_offsets.assign(capacity.size() + 1, 0);
    for (size_t v = 0; v < capacity.size(); ++v) {
      layout.offsets[v + 1] = layout.offsets[v] + capacity[v];
      layout.word_offsets[v + 1] = layout.word_offsets[v] + (capacity[v] + 63) / 64;
    }
    return layout;
  }
};

// Map (vertex, color) -> T. Colors below the vertex capacity live in a dense
// array, higher colors in a hash map.
template <typename T>
class VertexColorTable {
 public:
  VertexColorTable() = default;
  VertexColorTable(std::shared_ptr<const VertexLayout> layout, T empty)
      : layout_(std::move(layout)), empty_(empty), dense_(layout_->offsets.back(), empty) {}

  T get(Vertex v, Color c) const {
    int base = layout_->offsets[v];
    if (c < layout_->offsets[v + 1] - base) return dense_[base + c];
    auto it = high_.find(key(v, c));
    return it == high_.end() ? empty_ : it->second;
  }

  void set(Vertex v, Color c, T value) {
    int base = layout_->offsets[v];
    if (c < layout_->offsets[v + 1] - base) {
      dense_[base + c] = value;
    } else if (value == empty_) {
      high_.erase(key(v, c));
    } else {
      high_[key(v, c)] = value;
    }
  }

  size_t high_size() const { return high_.size(); }

 private:
  static uint64_t key(Vertex v, Color c) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(v)) << 32) | static_cast<uint32_t>(c);
  }

  std::shared_ptr<const VertexLayout> layout_;
  T empty_{};
  std::vector<T> dense_;
#ifdef EDGECOLOR_ORDERED_MAPS
  std::map<uint64_t, T> high_;
#else
  absl::flat_hash_map<uint64_t, T> high_;
#endif
};

}  // namespace edgecolor

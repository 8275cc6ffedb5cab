#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "edgecolor/graph.hpp"
#include "edgecolor/vertex_color_table.hpp"

namespace edgecolor {

// Colors keyed by class size in doubly linked buckets; sizes move by +-1.
class ClassSizeIndex {
 public:
  ClassSizeIndex() = default;
  ClassSizeIndex(int colors, int max_count);

  int count(Color c) const { return count_[c]; }
  void increment(Color c);
  void decrement(Color c);
  // k colors of smallest size, ties to the lower color.
  std::vector<Color> least(int k) const;

 private:
  void link(Color c, int bucket);
  void unlink(Color c);
  void open_bucket(int bucket, int neighbor, bool after);
  void close_bucket(int bucket);

  std::vector<int> count_;
  std::vector<Color> next_;
  std::vector<Color> prev_;
  std::vector<Color> head_;  // per count
  std::vector<int> next_bucket_;
  std::vector<int> prev_bucket_;
  int min_bucket_ = -1;
};

// Appended for both endpoints whenever an edge receives a color, i.e. each
// time a color leaves a vertex palette.
struct PaletteLoss {
  Vertex vertex;
  Color color;
  EdgeId edge;
};

struct AlternatingPath {
  Color a = kUncolored;
  Color b = kUncolored;
  Vertex start = kNoVertex;
  Vertex end = kNoVertex;
  std::vector<EdgeId> edges;
  bool is_maximal = true;

  size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }
};

inline constexpr size_t kUnlimited = std::numeric_limits<size_t>::max();

class PartialColoring {
 public:
  // palette: number of usable colors. Per-vertex dense storage covers colors
  // below min(palette, deg(v) + slack); slack defaults to max(1, palette - Δ).
  PartialColoring(const Graph& g, int palette, int slack = -1);

  const Graph& graph() const { return *graph_; }
  int palette_size() const { return palette_; }
  const std::shared_ptr<const VertexLayout>& layout() const { return layout_; }
  int capacity(Vertex v) const { return layout_->capacity(v); }

  Color color_of(EdgeId e) const { return color_[e]; }
  bool is_colored(EdgeId e) const { return color_[e] != kUncolored; }
  EdgeId slot(Vertex v, Color c) const { return slots_.get(v, c); }
  bool is_missing(Vertex v, Color c) const { return slots_.get(v, c) == kNoEdge; }
  std::span<const uint64_t> missing_bits(Vertex v) const {
    return {missing_.data() + layout_->word_offsets[v], static_cast<size_t>(layout_->words(v))};
  }

  Color missing_color_of(Vertex v) const;
  // Lowest c in [0, palette) missing at both endpoints, or kUncolored.
  Color common_missing(Vertex u, Vertex v) const;
  // Lowest `k` missing colors below the capacity of v.
  void lowest_missing(Vertex v, int k, std::vector<Color>& out) const;

  int class_size(Color c) const { return sizes_.count(c); }
  std::vector<EdgeId> class_members(Color c) const;
  std::vector<EdgeId> uncolored_edges() const;
  int uncolored_count() const { return uncolored_; }
  int colored_count() const { return graph_->num_edges() - uncolored_; }
  std::vector<Color> least_common_colors(int k) const;
  int colors_used() const;  // nonempty classes
  Color max_color_used() const;

  void set_color(EdgeId e, Color c);

  AlternatingPath walk_alternating(Vertex start, Color a, Color b, size_t limit = kUnlimited) const;
  void walk_alternating(Vertex start, Color a, Color b, size_t limit, AlternatingPath& out) const;
  void flip(const AlternatingPath& path);

  uint64_t version() const { return version_; }
  void set_journal(std::vector<PaletteLoss>* journal) { journal_ = journal; }
  std::vector<PaletteLoss>* journal() const { return journal_; }

  // Recompute every derived structure from color_of; throws InvariantViolation on mismatch.
  void audit() const;

 private:
  void list_remove(EdgeId e, int list);
  void list_append(EdgeId e, int list);
  void check_color(Color c) const;

  const Graph* graph_;
  int palette_;
  std::shared_ptr<const VertexLayout> layout_;
  std::vector<Color> color_;
  VertexColorTable<EdgeId> slots_;
  std::vector<uint64_t> missing_;  // bit set = color missing, below capacity
  ClassSizeIndex sizes_;
  // Intrusive lists per color; list index `palette_` holds uncolored edges.
  std::vector<EdgeId> head_;
  std::vector<EdgeId> tail_;
  std::vector<EdgeId> next_;
  std::vector<EdgeId> prev_;
  int uncolored_ = 0;
  uint64_t version_ = 0;
  std::vector<PaletteLoss>* journal_ = nullptr;
};

// Records into `journal` for the scope's lifetime, then forwards the entries
// to the enclosing journal, if any.
class JournalScope {
 public:
  JournalScope(PartialColoring& chi, std::vector<PaletteLoss>& journal)
      : chi_(chi), journal_(journal), saved_(chi.journal()) {
    journal.clear();
    chi.set_journal(&journal);
  }
  ~JournalScope() {
    chi_.set_journal(saved_);
    if (saved_ != nullptr) saved_->insert(saved_->end(), journal_.begin(), journal_.end());
  }
  JournalScope(const JournalScope&) = delete;
  JournalScope& operator=(const JournalScope&) = delete;

 private:
  PartialColoring& chi_;
  std::vector<PaletteLoss>& journal_;
  std::vector<PaletteLoss>* saved_;
};

inline int lowest_bit(std::span<const uint64_t> words) {
  for (size_t i = 0; i < words.size(); ++i) {
    if (words[i] != 0) return static_cast<int>(i * 64 + std::countr_zero(words[i]));
  }
  return -1;
}

}  // namespace edgecolor

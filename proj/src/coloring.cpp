#include "edgecolor/coloring.hpp"

#include <algorithm>
#include <string>

namespace edgecolor {

ClassSizeIndex::ClassSizeIndex(int colors, int max_count)
    : count_(colors, 0),
      next_(colors, -1),
      prev_(colors, -1),
      head_(max_count + 2, -1),
      next_bucket_(max_count + 2, -1),
      prev_bucket_(max_count + 2, -1) {
  for (Color c = colors - 1; c >= 0; --c) link(c, 0);
  if (colors > 0) min_bucket_ = 0;
}

void ClassSizeIndex::link(Color c, int bucket) {
  next_[c] = head_[bucket];
  prev_[c] = -1;
  if (head_[bucket] >= 0) prev_[head_[bucket]] = c;
  head_[bucket] = c;
}

void ClassSizeIndex::unlink(Color c) {
  int bucket = count_[c];
  if (prev_[c] >= 0) {
    next_[prev_[c]] = next_[c];
  } else {
    head_[bucket] = next_[c];
  }
  if (next_[c] >= 0) prev_[next_[c]] = prev_[c];
  next_[c] = prev_[c] = -1;
}

void ClassSizeIndex::open_bucket(int bucket, int neighbor, bool after) {
  if (after) {
    prev_bucket_[bucket] = neighbor;
    next_bucket_[bucket] = next_bucket_[neighbor];
    if (next_bucket_[neighbor] >= 0) prev_bucket_[next_bucket_[neighbor]] = bucket;
    next_bucket_[neighbor] = bucket;
  } else {
    next_bucket_[bucket] = neighbor;
    prev_bucket_[bucket] = prev_bucket_[neighbor];
    if (prev_bucket_[neighbor] >= 0) {
      next_bucket_[prev_bucket_[neighbor]] = bucket;
    } else {
      min_bucket_ = bucket;
    }
    prev_bucket_[neighbor] = bucket;
  }
}

void ClassSizeIndex::close_bucket(int bucket) {
  int p = prev_bucket_[bucket];
  int n = next_bucket_[bucket];
  if (p >= 0) {
    next_bucket_[p] = n;
  } else {
    min_bucket_ = n;
  }
  if (n >= 0) prev_bucket_[n] = p;
  prev_bucket_[bucket] = next_bucket_[bucket] = -1;
}

void ClassSizeIndex::increment(Color c) {
  int k = count_[c];
  unlink(c);
  if (head_[k + 1] < 0) open_bucket(k + 1, k, true);
  link(c, k + 1);
  count_[c] = k + 1;
  if (head_[k] < 0) close_bucket(k);
}

void ClassSizeIndex::decrement(Color c) {
  int k = count_[c];
  unlink(c);
  if (head_[k - 1] < 0) open_bucket(k - 1, k, false);
  link(c, k - 1);
  count_[c] = k - 1;
  if (head_[k] < 0) close_bucket(k);
}

std::vector<Color> ClassSizeIndex::least(int k) const {
  std::vector<Color> out;
  std::vector<Color> bucket;
  for (int b = min_bucket_; b >= 0 && static_cast<int>(out.size()) < k; b = next_bucket_[b]) {
    bucket.clear();
    for (Color c = head_[b]; c >= 0; c = next_[c]) bucket.push_back(c);
    size_t need = std::min(bucket.size(), static_cast<size_t>(k) - out.size());
    std::partial_sort(bucket.begin(), bucket.begin() + static_cast<std::ptrdiff_t>(need), bucket.end());
    out.insert(out.end(), bucket.begin(), bucket.begin() + static_cast<std::ptrdiff_t>(need));
  }
  return out;
}

PartialColoring::PartialColoring(const Graph& g, int palette, int slack) : graph_(&g), palette_(palette) {
  if (palette < 0) throw ContractError("negative palette size");
  if (slack < 0) slack = std::max(1, palette - g.max_degree());
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<int> capacity(n);
  for (Vertex v = 0; v < n; ++v) capacity[v] = std::min(palette, g.degree(v) + slack);
  layout_ = std::make_shared<const VertexLayout>(VertexLayout::from_capacities(capacity));
  color_.assign(m, kUncolored);
  slots_ = VertexColorTable<EdgeId>(layout_, kNoEdge);
  missing_.assign(layout_->word_offsets.back(), ~uint64_t{0});
  for (Vertex v = 0; v < n; ++v) {
    int cap = capacity[v];
    if (cap % 64 != 0) missing_[layout_->word_offsets[v + 1] - 1] = (uint64_t{1} << (cap % 64)) - 1;
  }
  sizes_ = ClassSizeIndex(palette, m);
  head_.assign(palette + 1, kNoEdge);
  tail_.assign(palette + 1, kNoEdge);
  next_.assign(m, kNoEdge);
  prev_.assign(m, kNoEdge);
  for (EdgeId e = 0; e < m; ++e) list_append(e, palette_);
  uncolored_ = m;
}

void PartialColoring::check_color(Color c) const {
  if (c != kUncolored && (c < 0 || c >= palette_)) {
    throw ContractError("color " + std::to_string(c) + " outside palette of size " + std::to_string(palette_));
  }
}

void PartialColoring::list_remove(EdgeId e, int list) {
  if (prev_[e] != kNoEdge) {
    next_[prev_[e]] = next_[e];
  } else {
    head_[list] = next_[e];
  }
  if (next_[e] != kNoEdge) {
    prev_[next_[e]] = prev_[e];
  } else {
    tail_[list] = prev_[e];
  }
  next_[e] = prev_[e] = kNoEdge;
}

void PartialColoring::list_append(EdgeId e, int list) {
  prev_[e] = tail_[list];
  next_[e] = kNoEdge;
  if (tail_[list] != kNoEdge) {
    next_[tail_[list]] = e;
  } else {
    head_[list] = e;
  }
  tail_[list] = e;
}

Color PartialColoring::missing_color_of(Vertex v) const {
  int c = lowest_bit(missing_bits(v));
  if (c < 0) throw InvariantViolation("no missing color at vertex " + std::to_string(v));
  return c;
}

Color PartialColoring::common_missing(Vertex u, Vertex v) const {
  auto bu = missing_bits(u);
  auto bv = missing_bits(v);
  size_t words = std::min(bu.size(), bv.size());
  for (size_t i = 0; i < words; ++i) {
    uint64_t both = bu[i] & bv[i];
    if (both != 0) return static_cast<Color>(i * 64 + std::countr_zero(both));
  }
  int start = std::min(capacity(u), capacity(v));
  for (Color c = start; c < palette_; ++c) {
    if (is_missing(u, c) && is_missing(v, c)) return c;
  }
  return kUncolored;
}

void PartialColoring::lowest_missing(Vertex v, int k, std::vector<Color>& out) const {
  out.clear();
  auto bits = missing_bits(v);
  for (size_t i = 0; i < bits.size() && static_cast<int>(out.size()) < k; ++i) {
    uint64_t w = bits[i];
    while (w != 0 && static_cast<int>(out.size()) < k) {
      out.push_back(static_cast<Color>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  for (Color c = capacity(v); c < palette_ && static_cast<int>(out.size()) < k; ++c) {
    if (is_missing(v, c)) out.push_back(c);
  }
}

std::vector<EdgeId> PartialColoring::class_members(Color c) const {
  check_color(c);
  int list = c == kUncolored ? palette_ : c;
  std::vector<EdgeId> out;
  for (EdgeId e = head_[list]; e != kNoEdge; e = next_[e]) out.push_back(e);
  return out;
}

std::vector<EdgeId> PartialColoring::uncolored_edges() const { return class_members(kUncolored); }

std::vector<Color> PartialColoring::least_common_colors(int k) const {
  if (k > palette_) throw ContractError("least_common_colors: k exceeds palette");
  return sizes_.least(k);
}

int PartialColoring::colors_used() const {
  int used = 0;
  for (Color c = 0; c < palette_; ++c) used += sizes_.count(c) > 0 ? 1 : 0;
  return used;
}

Color PartialColoring::max_color_used() const {
  for (Color c = palette_ - 1; c >= 0; --c) {
    if (sizes_.count(c) > 0) return c;
  }
  return kUncolored;
}

void PartialColoring::set_color(EdgeId e, Color c) {
  check_color(c);
  const Color old = color_[e];
  if (old == c) return;
  const Edge& ed = graph_->edge(e);
  if (c != kUncolored && (slots_.get(ed.u, c) != kNoEdge || slots_.get(ed.v, c) != kNoEdge)) {
    throw ProperError("color " + std::to_string(c) + " already present at an endpoint of edge " + std::to_string(e));
  }
  auto set_missing = [&](Vertex x, Color col, bool missing) {
    if (col >= capacity(x)) return;
    uint64_t& word = missing_[layout_->word_offsets[x] + col / 64];
    uint64_t bit = uint64_t{1} << (col % 64);
    word = missing ? (word | bit) : (word & ~bit);
  };
  if (old != kUncolored) {
    slots_.set(ed.u, old, kNoEdge);
    slots_.set(ed.v, old, kNoEdge);
    set_missing(ed.u, old, true);
    set_missing(ed.v, old, true);
    sizes_.decrement(old);
    list_remove(e, old);
  } else {
    --uncolored_;
    list_remove(e, palette_);
  }
  if (c != kUncolored) {
    slots_.set(ed.u, c, e);
    slots_.set(ed.v, c, e);
    set_missing(ed.u, c, false);
    set_missing(ed.v, c, false);
    sizes_.increment(c);
    list_append(e, c);
    if (journal_ != nullptr) {
      journal_->push_back({ed.u, c, e});
      journal_->push_back({ed.v, c, e});
    }
  } else {
    ++uncolored_;
    list_append(e, palette_);
  }
  color_[e] = c;
  ++version_;
}

AlternatingPath PartialColoring::walk_alternating(Vertex start, Color a, Color b, size_t limit) const {
  AlternatingPath path;
  walk_alternating(start, a, b, limit, path);
  return path;
}

void PartialColoring::walk_alternating(Vertex start, Color a, Color b, size_t limit, AlternatingPath& out) const {
  if (a == b) throw ContractError("walk_alternating: colors must differ");
  check_color(a);
  check_color(b);
  out.a = a;
  out.b = b;
  out.start = start;
  out.edges.clear();
  out.is_maximal = true;
  EdgeId ea = slots_.get(start, a);
  EdgeId eb = slots_.get(start, b);
  if (ea != kNoEdge && eb != kNoEdge) {
    throw ContractError("walk_alternating: start vertex " + std::to_string(start) + " misses neither color");
  }
  Vertex cur = start;
  Color next = ea != kNoEdge ? a : b;
  EdgeId e = ea != kNoEdge ? ea : eb;
  while (e != kNoEdge) {
    if (out.edges.size() == limit) {
      out.is_maximal = false;
      break;
    }
    out.edges.push_back(e);
    cur = graph_->other(e, cur);
    next = next == a ? b : a;
    e = slots_.get(cur, next);
  }
  out.end = cur;
}

void PartialColoring::flip(const AlternatingPath& path) {
  if (!path.is_maximal) throw ContractError("flip: path is not maximal");
  if (path.edges.empty()) return;
  std::vector<Color> before(path.edges.size());
  for (size_t i = 0; i < path.edges.size(); ++i) {
    before[i] = color_[path.edges[i]];
    if (before[i] != path.a && before[i] != path.b) throw ContractError("flip: edge color outside the path colors");
  }
  for (EdgeId e : path.edges) set_color(e, kUncolored);
  for (size_t i = 0; i < path.edges.size(); ++i) set_color(path.edges[i], before[i] == path.a ? path.b : path.a);
}

void PartialColoring::audit() const {
  const Graph& g = *graph_;
  const int m = g.num_edges();
  auto fail = [](const std::string& what) { throw InvariantViolation("coloring audit: " + what); };
  int uncolored = 0;
  std::vector<int> sizes(palette_, 0);
  for (EdgeId e = 0; e < m; ++e) {
    Color c = color_[e];
    if (c == kUncolored) {
      ++uncolored;
      continue;
    }
    if (c < 0 || c >= palette_) fail("edge " + std::to_string(e) + " has out-of-palette color");
    ++sizes[c];
    const Edge& ed = g.edge(e);
    if (slots_.get(ed.u, c) != e || slots_.get(ed.v, c) != e) {
      fail("slot mismatch or improper color at edge " + std::to_string(e));
    }
  }
  if (uncolored != uncolored_) fail("uncolored count");
  size_t entries = slots_.high_size();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Color c = 0; c < capacity(v); ++c) {
      bool occupied = slots_.get(v, c) != kNoEdge;
      entries += occupied ? 1 : 0;
      bool bit = (missing_[layout_->word_offsets[v] + c / 64] >> (c % 64)) & 1;
      if (bit == occupied) fail("missing set of vertex " + std::to_string(v) + " at color " + std::to_string(c));
    }
    int words = layout_->words(v);
    if (words > 0 && capacity(v) % 64 != 0) {
      uint64_t last = missing_[layout_->word_offsets[v + 1] - 1];
      if ((last >> (capacity(v) % 64)) != 0) fail("missing bits beyond capacity at vertex " + std::to_string(v));
    }
  }
  if (entries != 2 * static_cast<size_t>(m - uncolored)) fail("stale slot entries");
  for (Color c = 0; c < palette_; ++c) {
    if (sizes[c] != sizes_.count(c)) fail("class size of color " + std::to_string(c));
  }
  for (int list = 0; list <= palette_; ++list) {
    Color expect = list == palette_ ? kUncolored : list;
    int count = 0;
    EdgeId prev = kNoEdge;
    for (EdgeId e = head_[list]; e != kNoEdge; e = next_[e]) {
      if (color_[e] != expect || prev_[e] != prev) fail("class list " + std::to_string(list));
      prev = e;
      if (++count > m) fail("class list cycle");
    }
    if (tail_[list] != prev) fail("class list tail");
    if (count != (list == palette_ ? uncolored : sizes[list])) fail("class list length");
  }
  auto least = sizes_.least(std::min(palette_, 3));
  std::vector<Color> order(palette_);
  for (Color c = 0; c < palette_; ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](Color x, Color y) { return sizes[x] < sizes[y]; });
  for (size_t i = 0; i < least.size(); ++i) {
    if (least[i] != order[i]) fail("least-common index");
  }
}

}  // namespace edgecolor

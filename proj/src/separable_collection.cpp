#include "edgecolor/separable_collection.hpp"

#include <algorithm>
#include <string>

namespace edgecolor {

SeparableCollection::SeparableCollection(const PartialColoring& chi)
    : chi_(&chi),
      psi_(chi.layout(), kNoHandle),
      assigned_(chi.layout()->word_offsets.back(), 0),
      edge_owner_(chi.graph().num_edges(), kNoHandle) {}

void SeparableCollection::reserve_color(Vertex x, Color c, Handle h) {
  psi_.set(x, c, h);
  if (c < chi_->capacity(x)) assigned_[chi_->layout()->word_offsets[x] + c / 64] |= uint64_t{1} << (c % 64);
}

void SeparableCollection::release_color(Vertex x, Color c) {
  psi_.set(x, c, kNoHandle);
  if (c < chi_->capacity(x)) assigned_[chi_->layout()->word_offsets[x] + c / 64] &= ~(uint64_t{1} << (c % 64));
}

namespace {

bool joins(const Graph& g, EdgeId e, Vertex a, Vertex b) {
  const Edge& ed = g.edge(e);
  return (ed.u == a && ed.v == b) || (ed.u == b && ed.v == a);
}

bool component_valid(const PartialColoring& chi, const UComponent& g) {
  const Graph& graph = chi.graph();
  if (g.center_color == kUncolored || !joins(graph, g.edge1, g.center, g.leaf1) || chi.is_colored(g.edge1)) return false;
  if (!chi.is_missing(g.center, g.center_color)) return false;
  if (!g.is_fan()) return true;
  if (g.leaf_color == kUncolored || g.leaf_color == g.center_color) return false;
  if (g.leaf1 == g.leaf2 || g.edge1 == g.edge2) return false;
  if (!joins(graph, g.edge2, g.center, g.leaf2) || chi.is_colored(g.edge2)) return false;
  return chi.is_missing(g.leaf1, g.leaf_color) && chi.is_missing(g.leaf2, g.leaf_color);
}

}  // namespace

std::optional<Handle> SeparableCollection::insert(const UComponent& g) {
  if (!component_valid(*chi_, g)) throw ContractError("insert: component is not valid under the current coloring");
  if (edge_owner_[g.edge1] != kNoHandle) return std::nullopt;
  if (psi_.get(g.center, g.center_color) != kNoHandle) return std::nullopt;
  if (g.is_fan()) {
    if (edge_owner_[g.edge2] != kNoHandle) return std::nullopt;
    if (psi_.get(g.leaf1, g.leaf_color) != kNoHandle || psi_.get(g.leaf2, g.leaf_color) != kNoHandle) {
      return std::nullopt;
    }
  }
  auto h = static_cast<Handle>(items_.size());
  items_.push_back({g, static_cast<int>(dense_.size()), true});
  dense_.push_back(h);
  edge_owner_[g.edge1] = h;
  reserve_color(g.center, g.center_color, h);
  if (g.is_fan()) {
    edge_owner_[g.edge2] = h;
    reserve_color(g.leaf1, g.leaf_color, h);
    reserve_color(g.leaf2, g.leaf_color, h);
    ++fans_;
  }
  return h;
}

bool SeparableCollection::erase(Handle h) {
  if (!contains(h)) return false;
  Item& item = items_[h];
  const UComponent& g = item.component;
  edge_owner_[g.edge1] = kNoHandle;
  release_color(g.center, g.center_color);
  if (g.is_fan()) {
    edge_owner_[g.edge2] = kNoHandle;
    release_color(g.leaf1, g.leaf_color);
    release_color(g.leaf2, g.leaf_color);
    --fans_;
  }
  Handle last = dense_.back();
  dense_[item.position] = last;
  items_[last].position = item.position;
  dense_.pop_back();
  item.alive = false;
  item.position = -1;
  return true;
}

void SeparableCollection::clear() {
  while (!dense_.empty()) erase(dense_.back());
  items_.clear();
}

bool SeparableCollection::is_spare(Vertex x, Color c) const {
  return chi_->is_missing(x, c) && psi_.get(x, c) == kNoHandle;
}

Color SeparableCollection::missing_color(Vertex x) const {
  auto miss = chi_->missing_bits(x);
  size_t base = chi_->layout()->word_offsets[x];
  for (size_t i = 0; i < miss.size(); ++i) {
    uint64_t w = miss[i] & ~assigned_[base + i];
    if (w != 0) return static_cast<Color>(i * 64 + std::countr_zero(w));
  }
  for (Color c = chi_->capacity(x); c < chi_->palette_size(); ++c) {
    if (is_spare(x, c)) return c;
  }
  throw InvariantViolation("no spare color at vertex " + std::to_string(x));
}

void SeparableCollection::spare_colors(Vertex x, int k, std::vector<Color>& out) const {
  out.clear();
  auto miss = chi_->missing_bits(x);
  size_t base = chi_->layout()->word_offsets[x];
  for (size_t i = 0; i < miss.size() && static_cast<int>(out.size()) < k; ++i) {
    uint64_t w = miss[i] & ~assigned_[base + i];
    while (w != 0 && static_cast<int>(out.size()) < k) {
      out.push_back(static_cast<Color>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  for (Color c = chi_->capacity(x); c < chi_->palette_size() && static_cast<int>(out.size()) < k; ++c) {
    if (is_spare(x, c)) out.push_back(c);
  }
}

bool SeparableCollection::is_valid(Handle h) const { return contains(h) && component_valid(*chi_, items_[h].component); }

std::vector<Handle> SeparableCollection::damaged_by_flip(std::pair<Vertex, Vertex> endpoints,
                                                          std::pair<Color, Color> lost) const {
  std::vector<Handle> out;
  auto check = [&](Vertex x, Color c) {
    if (x == kNoVertex || c == kUncolored) return;
    Handle h = psi_.get(x, c);
    if (h != kNoHandle && !chi_->is_missing(x, c) && std::find(out.begin(), out.end(), h) == out.end()) {
      out.push_back(h);
    }
  };
  check(endpoints.first, lost.first);
  check(endpoints.second, lost.second);
  return out;
}

void SeparableCollection::collect_damaged(std::span<const PaletteLoss> journal, std::vector<Handle>& out) const {
  out.clear();
  auto add = [&](Handle h) {
    if (h != kNoHandle && std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  };
  for (const PaletteLoss& loss : journal) {
    Handle h = psi_.get(loss.vertex, loss.color);
    if (h != kNoHandle && !chi_->is_missing(loss.vertex, loss.color)) add(h);
    Handle owner = edge_owner_[loss.edge];
    if (owner != kNoHandle && chi_->is_colored(loss.edge)) add(owner);
  }
}

Handle SeparableCollection::sample_uniform(Rng& rng) const {
  if (dense_.empty()) throw ContractError("sample_uniform on an empty collection");
  return dense_[rng.below(dense_.size())];
}

void SeparableCollection::audit() const {
  auto fail = [](const std::string& what) { throw InvariantViolation("separable collection audit: " + what); };
  size_t expected_entries = 0;
  size_t fans = 0;
  std::vector<Handle> owner(edge_owner_.size(), kNoHandle);
  for (size_t i = 0; i < dense_.size(); ++i) {
    Handle h = dense_[i];
    if (!contains(h) || items_[h].position != static_cast<int>(i)) fail("sampling array");
    const UComponent& g = items_[h].component;
    if (!component_valid(*chi_, g)) fail("component " + std::to_string(h) + " is damaged");
    for (EdgeId e : {g.edge1, g.edge2}) {
      if (e == kNoEdge) continue;
      if (owner[e] != kNoHandle) fail("components share edge " + std::to_string(e));
      owner[e] = h;
    }
    if (psi_.get(g.center, g.center_color) != h) fail("psi at center of " + std::to_string(h));
    ++expected_entries;
    if (g.is_fan()) {
      ++fans;
      if (psi_.get(g.leaf1, g.leaf_color) != h || psi_.get(g.leaf2, g.leaf_color) != h) {
        fail("psi at leaves of " + std::to_string(h));
      }
      expected_entries += 2;
    }
  }
  if (fans != fans_) fail("fan count");
  if (owner != edge_owner_) fail("edge ownership");
  size_t entries = psi_.high_size();
  const Graph& g = chi_->graph();
  for (Vertex x = 0; x < g.num_vertices(); ++x) {
    size_t base = chi_->layout()->word_offsets[x];
    for (Color c = 0; c < chi_->capacity(x); ++c) {
      bool has = psi_.get(x, c) != kNoHandle;
      entries += has ? 1 : 0;
      bool bit = (assigned_[base + c / 64] >> (c % 64)) & 1;
      if (bit != has) fail("assigned set of vertex " + std::to_string(x));
    }
  }
  if (entries != expected_entries) fail("stray psi entries (separability 2)");
}

}  // namespace edgecolor

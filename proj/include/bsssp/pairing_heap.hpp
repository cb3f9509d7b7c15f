#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsssp/errors.hpp"
#include "bsssp/graph.hpp"
#include "bsssp/metering.hpp"

namespace bsssp {

namespace detail {
inline NullMeter null_meter;
}

// Addressable min-priority queue over dense ids [0, capacity), implemented as
// a two-pass pairing heap: O(1) insert and decrease-key, amortized O(log n)
// extract-min. Entries are ordered by (key, id), so equal keys leave in
// increasing id order. Key comparisons go through the meter.
//
// clear() costs O(ids touched since the last clear), which lets one queue be
// reused across many small searches over a large id space.
template <Meter M = NullMeter>
class AddressablePQ {
 public:
  struct Entry {
    VertexId id;
    Weight key;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  explicit AddressablePQ(std::size_t capacity = 0)
    requires std::same_as<M, NullMeter>
      : meter_(&detail::null_meter) {
    resize(capacity);
  }

  AddressablePQ(std::size_t capacity, M& meter) : meter_(&meter) { resize(capacity); }

  // Drops all entries and changes the id range.
  void resize(std::size_t capacity) {
    nodes_.assign(capacity, Node{});
    touched_.clear();
    root_ = kNoVertex;
    size_ = 0;
  }

  std::size_t capacity() const noexcept { return nodes_.size(); }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(VertexId id) const noexcept { return id < nodes_.size() && nodes_[id].present; }

  Weight key(VertexId id) const {
    if (!contains(id)) throw NotFound("id " + std::to_string(id) + " not in queue");
    return nodes_[id].key;
  }

  std::optional<Entry> top() const noexcept {
    if (root_ == kNoVertex) return std::nullopt;
    return Entry{root_, nodes_[root_].key};
  }

  void insert(VertexId id, Weight key) {
    if (id >= nodes_.size()) throw OutOfRange("id " + std::to_string(id) + " beyond queue capacity");
    Node& x = nodes_[id];
    if (x.present) throw DuplicateKey("id " + std::to_string(id) + " already queued");
    x = Node{key, kNoVertex, kNoVertex, kNoVertex, true};
    touched_.push_back(id);
    root_ = root_ == kNoVertex ? id : link(root_, id);
    ++size_;
  }

  // Precondition key <= current key. The precondition test is a contract
  // check, not part of the algorithm, and is not metered.
  void decrease_key(VertexId id, Weight key) {
    if (!contains(id)) throw NotFound("id " + std::to_string(id) + " not in queue");
    Node& x = nodes_[id];
    if (key > x.key) throw KeyIncrease("id " + std::to_string(id) + ": new key is larger");
    if (key == x.key) return;
    x.key = key;
    if (id == root_) return;
    cut(id);
    root_ = link(root_, id);
  }

  std::optional<Entry> extract_min() {
    if (root_ == kNoVertex) return std::nullopt;
    const VertexId r = root_;
    Node& x = nodes_[r];
    x.present = false;
    --size_;
    root_ = merge_pairs(x.child);
    x.child = kNoVertex;
    if (root_ != kNoVertex) {
      nodes_[root_].prev = kNoVertex;
      nodes_[root_].sibling = kNoVertex;
    }
    return Entry{r, x.key};
  }

  void clear() noexcept {
    for (VertexId id : touched_) nodes_[id] = Node{};
    touched_.clear();
    root_ = kNoVertex;
    size_ = 0;
  }

 private:
  struct Node {
    Weight key = 0;
    VertexId child = kNoVertex;
    VertexId sibling = kNoVertex;
    VertexId prev = kNoVertex;  // parent if leftmost child, else left sibling
    bool present = false;
  };

  bool precedes(VertexId a, VertexId b) {
    auto c = meter_->cmp(nodes_[a].key, nodes_[b].key);
    if (c != 0) return c < 0;
    return a < b;
  }

  // Both arguments are detached roots; returns the new root.
  VertexId link(VertexId a, VertexId b) {
    if (precedes(b, a)) std::swap(a, b);
    Node& winner = nodes_[a];
    Node& loser = nodes_[b];
    loser.prev = a;
    loser.sibling = winner.child;
    if (winner.child != kNoVertex) nodes_[winner.child].prev = b;
    winner.child = b;
    winner.prev = kNoVertex;
    winner.sibling = kNoVertex;
    return a;
  }

  void cut(VertexId id) {
    Node& x = nodes_[id];
    Node& p = nodes_[x.prev];
    if (p.child == id) {
      p.child = x.sibling;
    } else {
      p.sibling = x.sibling;
    }
    if (x.sibling != kNoVertex) nodes_[x.sibling].prev = x.prev;
    x.prev = kNoVertex;
    x.sibling = kNoVertex;
  }

  // First pass links neighbours left to right and threads the winners into
  // a reversed list through `sibling`; second pass folds that list.
  VertexId merge_pairs(VertexId first) {
    VertexId stack = kNoVertex;
    VertexId x = first;
    while (x != kNoVertex) {
      const VertexId a = x;
      const VertexId b = nodes_[a].sibling;
      VertexId w;
      if (b == kNoVertex) {
        x = kNoVertex;
        w = a;
      } else {
        x = nodes_[b].sibling;
        nodes_[b].sibling = kNoVertex;
        nodes_[a].sibling = kNoVertex;
        w = link(a, b);
      }
      nodes_[w].prev = kNoVertex;
      nodes_[w].sibling = stack;
      stack = w;
    }
    if (stack == kNoVertex) return kNoVertex;
    VertexId r = stack;
    stack = nodes_[r].sibling;
    nodes_[r].sibling = kNoVertex;
    while (stack != kNoVertex) {
      const VertexId next = nodes_[stack].sibling;
      nodes_[stack].sibling = kNoVertex;
      r = link(stack, r);
      stack = next;
    }
    return r;
  }

  M* meter_;
  std::vector<Node> nodes_;
  std::vector<VertexId> touched_;
  VertexId root_ = kNoVertex;
  std::size_t size_ = 0;
};

}  // namespace bsssp

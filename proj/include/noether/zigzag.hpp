#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "noether/form.hpp"

namespace noether {

class SlominskiForm;

enum class Direction { right, left };

struct Edge {
  Morphism morphism;
  Direction direction = Direction::right;  // right: dom is the left node
};

class Zigzag {
 public:
  explicit Zigzag(ObjectId start) : nodes_{start} {}
  /// Throws composition errors when an edge does not connect its nodes.
  Zigzag(std::vector<ObjectId> nodes, std::vector<Edge> edges);
  /// Nodes read off the edges.
  static Zigzag from_edges(ObjectId start, std::vector<Edge> edges);

  const std::vector<ObjectId>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t length() const { return edges_.size(); }
  ObjectId front() const { return nodes_.front(); }
  ObjectId back() const { return nodes_.back(); }

  Zigzag opposite() const;
  Zigzag then(Edge e) const;

  bool operator==(const Zigzag& other) const;

 private:
  std::vector<ObjectId> nodes_;
  std::vector<Edge> edges_;
};

struct Chase {
  Subobject result;
  std::vector<Subobject> trace;  // every node's subobject, start included; empty unless asked
};

/// Direct images along right edges, inverse images along left edges.
Chase chase_forward(const Zigzag& z, Subobject s, bool with_trace = false);
/// The same walk from the final node back to the first.
Chase chase_backward(const Zigzag& z, Subobject t, bool with_trace = false);

/// Every left edge is an isomorphism.
bool is_collapsible(const Form& form, const Zigzag& z);
/// Composite with left edges inverted; throws not_collapsible.
Morphism collapse(const Form& form, const Zigzag& z);
/// Left edges are embeddings and right edges projections.
bool is_subquotient(const Form& form, const Zigzag& z);

/// Binary relation between two finite carriers, one bit mask per row.
struct Relation {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> row_masks;

  bool related(std::size_t x, std::size_t y) const { return (row_masks[x] >> y) & 1u; }
  bool is_function() const;
  std::optional<std::vector<std::size_t>> as_function() const;
  bool operator==(const Relation&) const = default;
};

/// Composite of graphs along right edges and of opposite graphs along left
/// edges. Every edge must carry an element table.
Relation induced_relation(const SlominskiForm& form, const Zigzag& z);

}  // namespace noether

#include "noether/zigzag.hpp"

#include <bit>

#include "noether/slominski.hpp"

namespace noether {

namespace {

void check_edge(ObjectId left, ObjectId right, const Edge& e) {
  const Morphism& m = e.morphism;
  bool ok = e.direction == Direction::right ? (m.dom == left && m.cod == right)
                                            : (m.dom == right && m.cod == left);
  if (!ok) throw Error(ErrorKind::composition, "edge " + m.label + " does not connect its nodes");
}

}  // namespace

Zigzag::Zigzag(std::vector<ObjectId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  if (nodes_.size() != edges_.size() + 1)
    throw Error(ErrorKind::composition, "a zigzag needs one more node than edges");
  for (std::size_t i = 0; i < edges_.size(); ++i) check_edge(nodes_[i], nodes_[i + 1], edges_[i]);
}

Zigzag Zigzag::from_edges(ObjectId start, std::vector<Edge> edges) {
  std::vector<ObjectId> nodes{start};
  for (const auto& e : edges)
    nodes.push_back(e.direction == Direction::right ? e.morphism.cod : e.morphism.dom);
  return Zigzag(std::move(nodes), std::move(edges));
}

Zigzag Zigzag::opposite() const {
  std::vector<ObjectId> nodes(nodes_.rbegin(), nodes_.rend());
  std::vector<Edge> edges;
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it)
    edges.push_back({it->morphism, it->direction == Direction::right ? Direction::left
                                                                     : Direction::right});
  return Zigzag(std::move(nodes), std::move(edges));
}

Zigzag Zigzag::then(Edge e) const {
  auto edges = edges_;
  edges.push_back(std::move(e));
  return from_edges(front(), std::move(edges));
}

bool Zigzag::operator==(const Zigzag& other) const {
  if (nodes_ != other.nodes_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].direction != other.edges_[i].direction ||
        !same_maps(edges_[i].morphism, other.edges_[i].morphism) ||
        edges_[i].morphism.table != other.edges_[i].morphism.table)
      return false;
  return true;
}

Chase chase_forward(const Zigzag& z, Subobject s, bool with_trace) {
  if (s.owner != z.front()) throw Error(ErrorKind::ownership, "subobject not at the first node");
  Chase c{s, {}};
  if (with_trace) c.trace.push_back(s);
  for (const auto& e : z.edges()) {
    c.result = e.direction == Direction::right ? direct_image(e.morphism, c.result)
                                               : inverse_image(e.morphism, c.result);
    if (with_trace) c.trace.push_back(c.result);
  }
  return c;
}

Chase chase_backward(const Zigzag& z, Subobject t, bool with_trace) {
  if (t.owner != z.back()) throw Error(ErrorKind::ownership, "subobject not at the last node");
  return chase_forward(z.opposite(), t, with_trace);
}

bool is_collapsible(const Form& form, const Zigzag& z) {
  for (const auto& e : z.edges())
    if (e.direction == Direction::left && !is_isomorphism(form, e.morphism)) return false;
  return true;
}

Morphism collapse(const Form& form, const Zigzag& z) {
  Morphism acc = form.identity(z.front());
  for (const auto& e : z.edges()) {
    if (e.direction == Direction::right) {
      acc = form.compose(e.morphism, acc);
    } else {
      if (!is_isomorphism(form, e.morphism))
        throw Error(ErrorKind::not_collapsible, form.arrow_name(e.morphism) +
                                                    " points left but is not an isomorphism");
      acc = form.compose(form.inverse(e.morphism), acc);
    }
  }
  return acc;
}

bool is_subquotient(const Form& form, const Zigzag& z) {
  for (const auto& e : z.edges()) {
    bool ok = e.direction == Direction::left ? is_injective(form, e.morphism)
                                             : is_surjective(form, e.morphism);
    if (!ok) return false;
  }
  return true;
}

bool Relation::is_function() const {
  for (auto m : row_masks)
    if (std::popcount(m) != 1) return false;
  return true;
}

std::optional<std::vector<std::size_t>> Relation::as_function() const {
  if (!is_function()) return std::nullopt;
  std::vector<std::size_t> f(rows);
  for (std::size_t x = 0; x < rows; ++x) f[x] = static_cast<std::size_t>(std::countr_zero(row_masks[x]));
  return f;
}

Relation induced_relation(const SlominskiForm& form, const Zigzag& z) {
  const std::size_t n = form.algebra(z.front()).size();
  Relation r{n, n, std::vector<std::uint64_t>(n)};
  for (std::size_t x = 0; x < n; ++x) r.row_masks[x] = singleton(x);
  for (const auto& e : z.edges()) {
    const Morphism& m = e.morphism;
    if (!m.has_table())
      throw Error(ErrorKind::unsupported_form, form.arrow_name(m) + " has no element table");
    Relation next;
    next.rows = n;
    if (e.direction == Direction::right) {
      next.cols = form.algebra(m.cod).size();
      for (auto mask : r.row_masks) {
        std::uint64_t img = 0;
        for (; mask; mask &= mask - 1) img |= singleton(m.table[std::countr_zero(mask)]);
        next.row_masks.push_back(img);
      }
    } else {
      next.cols = form.algebra(m.dom).size();
      std::vector<std::uint64_t> fibre(form.algebra(m.cod).size(), 0);
      for (std::size_t x = 0; x < m.table.size(); ++x) fibre[m.table[x]] |= singleton(x);
      for (auto mask : r.row_masks) {
        std::uint64_t pre = 0;
        for (; mask; mask &= mask - 1) pre |= fibre[std::countr_zero(mask)];
        next.row_masks.push_back(pre);
      }
    }
    r = std::move(next);
  }
  return r;
}

}  // namespace noether

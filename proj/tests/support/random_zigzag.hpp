#pragma once

#include <random>
#include <vector>

#include "noether/slominski.hpp"
#include "noether/zigzag.hpp"
#include "oracle.hpp"

namespace noether::testing {

// Random zigzag of 1..max_len edges over `pool`, each edge a uniformly chosen hom.
inline Zigzag random_zigzag(const SlominskiForm& form, const std::vector<ObjectId>& pool,
                            std::mt19937_64& rng, std::size_t max_len = 6) {
  std::size_t len = 1 + rng() % max_len;
  ObjectId cur = pool[rng() % pool.size()];
  const ObjectId start = cur;
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < len; ++k) {
    ObjectId next = pool[rng() % pool.size()];
    bool right = rng() % 2;
    ObjectId dom = right ? cur : next, cod = right ? next : cur;
    auto tables = enumerate_homs(form.algebra(dom), form.algebra(cod));
    Morphism m = form.hom(dom, cod, tables[rng() % tables.size()], "e" + std::to_string(k));
    edges.push_back({m, right ? Direction::right : Direction::left});
    cur = next;
  }
  return Zigzag::from_edges(start, std::move(edges));
}

// Relational composite computed from the element tables alone.
inline oracle::Rel relation_oracle(const SlominskiForm& form, const Zigzag& z) {
  oracle::Rel r(form.order(z.front()));
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = oracle::Set{1} << x;
  for (const Edge& e : z.edges()) {
    const auto& t = e.morphism.table;
    r = oracle::then(r, e.direction == Direction::right
                            ? oracle::graph(t)
                            : oracle::opposite_graph(t, form.order(e.morphism.cod)));
  }
  return r;
}

}  // namespace noether::testing

#include "noether/pyramid.hpp"

#include <sstream>

#include "noether/slominski.hpp"

namespace noether {

Pyramid::Pyramid(Zigzag base) : base_(std::move(base)), n_(base_.length()) {
  const std::size_t cells = (n_ + 1) * (n_ + 1);
  nodes_.assign(cells, 0);
  ne_.assign(cells, PyramidArrow{});
  nw_.assign(cells, PyramidArrow{});
  for (std::size_t k = 0; k <= n_; ++k) nodes_[slot(k, k)] = base_.nodes()[k];
}

std::size_t Pyramid::slot(std::size_t i, std::size_t j) const {
  if (i > j || j > n_) throw Error(ErrorKind::ownership, "no pyramid node there");
  return i * (n_ + 1) + j;
}

const PyramidArrow& Pyramid::ne(std::size_t i, std::size_t j) const {
  if (j >= n_) throw Error(ErrorKind::ownership, "no arrow there");
  return ne_.at(slot(i, j));
}

const PyramidArrow& Pyramid::nw(std::size_t i, std::size_t j) const {
  if (i == 0) throw Error(ErrorKind::ownership, "no arrow there");
  return nw_.at(slot(i, j));
}

Edge Pyramid::step(const PyramidArrow& a, bool from_lower) {
  // Moving from the lower node, an up arrow points forward.
  bool forward = from_lower == a.up;
  return {a.morphism, forward ? Direction::right : Direction::left};
}

Zigzag Pyramid::principal_horizontal() const {
  std::vector<ObjectId> nodes{node(0, 0)};
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < n_; ++j) {
    edges.push_back(step(ne(0, j), true));
    nodes.push_back(node(0, j + 1));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    edges.push_back(step(nw(i + 1, n_), false));
    nodes.push_back(node(i + 1, n_));
  }
  return Zigzag(std::move(nodes), std::move(edges));
}

Zigzag Pyramid::principal_vertical_left() const {
  std::vector<ObjectId> nodes{node(0, 0)};
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < n_; ++j) {
    edges.push_back(step(ne(0, j), true));
    nodes.push_back(node(0, j + 1));
  }
  return Zigzag(std::move(nodes), std::move(edges));
}

Zigzag Pyramid::principal_vertical_right() const {
  std::vector<ObjectId> nodes{node(n_, n_)};
  std::vector<Edge> edges;
  for (std::size_t i = n_; i > 0; --i) {
    edges.push_back(step(nw(i, n_), true));
    nodes.push_back(node(i - 1, n_));
  }
  return Zigzag(std::move(nodes), std::move(edges));
}

namespace {

Morphism first_or_throw(const Form& form, std::vector<Morphism> candidates, const char* what,
                        Subobject s) {
  if (candidates.empty())
    throw Error(ErrorKind::unsupported_form,
                std::string("no universal arrow for ") + what + " " + form.sub_name(s));
  return std::move(candidates.front());
}

Morphism require_projection(const Form& form, Subobject s) {
  auto p = form.projection_of(s);
  if (!p) throw Error(ErrorKind::unsupported_form, "no projection for " + form.sub_name(s));
  return *p;
}

Morphism require_embedding(const Form& form, Subobject s) {
  auto m = form.embedding_of(s);
  if (!m) throw Error(ErrorKind::unsupported_form, "no embedding for " + form.sub_name(s));
  return *m;
}

struct Split {
  Morphism up;    // from the source to the apex
  Morphism down;  // from the apex to the target
};

Split split(const Form& form, const Morphism& f, const BuildOptions& options) {
  auto fac = form.try_factorize(f);
  if (!fac)
    throw Error(ErrorKind::unsupported_form, "cannot factorize " + form.arrow_name(f) +
                                                 " through " + form.sub_name(kernel(form, f)));
  if (options.image_side_apex) return {form.compose(fac->h, fac->e), fac->m};
  return {fac->e, form.compose(fac->m, fac->h)};
}

}  // namespace

Pyramid build_pyramid(const Form& form, const Zigzag& z, const BuildOptions& options) {
  Pyramid p(z);
  const std::size_t n = z.length();
  for (std::size_t k = 1; k <= n; ++k) {
    const Edge& e = z.edges()[k - 1];
    Split s = split(form, e.morphism, options);
    if (e.direction == Direction::right) {
      p.set_node(k - 1, k, s.up.cod);
      p.set_ne(k - 1, k - 1, {s.up, true});
      p.set_nw(k, k, {s.down, false});
    } else {
      p.set_node(k - 1, k, s.up.cod);
      p.set_nw(k, k, {s.up, true});
      p.set_ne(k - 1, k - 1, {s.down, false});
    }
  }
  for (std::size_t layer = 2; layer <= n; ++layer) {
    const std::size_t count = n - layer + 1;  // diamonds whose apex sits on this layer
    for (std::size_t c = 0; c < count; ++c) {
      const std::size_t i = 1 + (options.right_to_left ? count - 1 - c : c);
      const std::size_t j = i + layer - 2;  // bottom node (i, j)
      const PyramidArrow& left = p.nw(i, j);
      const PyramidArrow& right = p.ne(i, j);
      if (left.up && right.up) {
        Subobject k = join(form, kernel(form, left.morphism), kernel(form, right.morphism));
        Morphism proj = require_projection(form, k);
        Morphism x = first_or_throw(form, form.descents(left.morphism, proj), "quotient by", k);
        Morphism y = first_or_throw(form, form.descents(right.morphism, proj), "quotient by", k);
        p.set_node(i - 1, j + 1, proj.cod);
        p.set_ne(i - 1, j, {x, true});
        p.set_nw(i, j + 1, {y, true});
      } else if (!left.up && !right.up) {
        Subobject s = meet(form, image(form, left.morphism), image(form, right.morphism));
        Morphism emb = require_embedding(form, s);
        Morphism x = first_or_throw(form, form.lifts(left.morphism, emb), "meet", s);
        Morphism y = first_or_throw(form, form.lifts(right.morphism, emb), "meet", s);
        p.set_node(i - 1, j + 1, emb.dom);
        p.set_ne(i - 1, j, {x, false});
        p.set_nw(i, j + 1, {y, false});
      } else if (!left.up) {
        // left node -> bottom -> right node
        Split s = split(form, form.compose(right.morphism, left.morphism), options);
        p.set_node(i - 1, j + 1, s.up.cod);
        p.set_ne(i - 1, j, {s.up, true});
        p.set_nw(i, j + 1, {s.down, false});
      } else {
        // right node -> bottom -> left node
        Split s = split(form, form.compose(left.morphism, right.morphism), options);
        p.set_node(i - 1, j + 1, s.up.cod);
        p.set_nw(i, j + 1, {s.up, true});
        p.set_ne(i - 1, j, {s.down, false});
      }
    }
  }
  return p;
}

namespace {

Edge walk(const PyramidArrow& a, bool from_lower) {
  bool forward = from_lower == a.up;
  return {a.morphism, forward ? Direction::right : Direction::left};
}

}  // namespace

std::optional<std::string> check_pyramid(const Form& form, const Pyramid& p) {
  const std::size_t n = p.height();
  auto kind_ok = [&](const PyramidArrow& a) {
    return a.up ? is_surjective(form, a.morphism) : is_injective(form, a.morphism);
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      if (j < n && !kind_ok(p.ne(i, j)))
        return "arrow between X_" + std::to_string(i) + "^" + std::to_string(j) +
               " and X_" + std::to_string(i) + "^" + std::to_string(j + 1) + " has the wrong kind";
      if (i > 0 && !kind_ok(p.nw(i, j)))
        return "arrow between X_" + std::to_string(i) + "^" + std::to_string(j) + " and X_" +
               std::to_string(i - 1) + "^" + std::to_string(j) + " has the wrong kind";
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const ObjectId l = p.node(i - 1, j), r = p.node(i, j + 1);
      Zigzag lower = Zigzag::from_edges(l, {walk(p.nw(i, j), false), walk(p.ne(i, j), true)});
      Zigzag upper =
          Zigzag::from_edges(l, {walk(p.ne(i - 1, j), true), walk(p.nw(i, j + 1), false)});
      const std::string where =
          "diamond over X_" + std::to_string(i) + "^" + std::to_string(j);
      for (SubIndex s = 0; s < form.lattice(l).size(); ++s)
        if (chase_forward(lower, {l, s}).result != chase_forward(upper, {l, s}).result)
          return where + " at " + form.sub_name({l, s});
      for (SubIndex s = 0; s < form.lattice(r).size(); ++s)
        if (chase_backward(lower, {r, s}).result != chase_backward(upper, {r, s}).result)
          return where + " at " + form.sub_name({r, s});
    }
  return std::nullopt;
}

std::string to_dot(const Form& form, const Pyramid& p) {
  const std::size_t n = p.height();
  std::ostringstream out;
  auto id = [](std::size_t i, std::size_t j) {
    return "X_" + std::to_string(i) + "_" + std::to_string(j);
  };
  out << "digraph pyramid {\n  rankdir=BT;\n";
  for (std::size_t layer = 0; layer <= n; ++layer) {
    out << "  { rank=same;";
    for (std::size_t i = 0; i + layer <= n; ++i) out << " " << id(i, i + layer) << ";";
    out << " }\n";
  }
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      out << "  " << id(i, j) << " [label=\"X_" << i << "^" << j << "\\n"
          << form.object_name(p.node(i, j)) << "\"];\n";
  auto arrow = [&](const PyramidArrow& a, std::size_t li, std::size_t lj, std::size_t ui,
                   std::size_t uj) {
    std::string lower = id(li, lj), upper = id(ui, uj);
    out << "  " << (a.up ? lower : upper) << " -> " << (a.up ? upper : lower) << " [style="
        << (a.up ? "solid" : "dashed") << ", label=\"" << a.morphism.label << "\"];\n";
  };
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      if (j < n) arrow(p.ne(i, j), i, j, i, j + 1);
      if (i > 0) arrow(p.nw(i, j), i, j, i - 1, j);
    }
  out << "}\n";
  return out.str();
}

InductionVerdict decide_induction(const Form& form, const Zigzag& z) {
  InductionVerdict v;
  Chase fwd = chase_forward(z, bottom(form, z.front()), true);
  if (fwd.result != bottom(form, z.back())) {
    v.failed_condition = "forward-bottom";
    for (std::size_t k = 0; k < fwd.trace.size(); ++k)
      if (fwd.trace[k] != bottom(form, fwd.trace[k].owner)) {
        v.node = k;
        v.offending = fwd.trace[k];
        break;
      }
    v.witness = "chasing bottom forward reaches " + form.sub_name(fwd.result) +
                "; first exceeds bottom at node " + std::to_string(v.node) + " (" +
                form.sub_name(*v.offending) + ")";
    return v;
  }
  Chase bwd = chase_backward(z, top(form, z.back()), true);
  if (bwd.result != top(form, z.front())) {
    v.failed_condition = "backward-top";
    const std::size_t last = z.length();
    for (std::size_t k = 0; k < bwd.trace.size(); ++k)
      if (bwd.trace[k] != top(form, bwd.trace[k].owner)) {
        v.node = last - k;
        v.offending = bwd.trace[k];
        break;
      }
    v.witness = "chasing top backward reaches " + form.sub_name(bwd.result) +
                "; first falls below top at node " + std::to_string(v.node) + " (" +
                form.sub_name(*v.offending) + ")";
    return v;
  }
  Morphism m;
  m.dom = z.front();
  m.cod = z.back();
  for (SubIndex s = 0; s < form.lattice(m.dom).size(); ++s)
    m.dimg.push_back(chase_forward(z, {m.dom, s}).result.index);
  for (SubIndex s = 0; s < form.lattice(m.cod).size(); ++s)
    m.iimg.push_back(chase_backward(z, {m.cod, s}).result.index);
  for (const auto& e : z.edges()) {
    if (!m.label.empty()) m.label += " ";
    m.label += e.morphism.label + (e.direction == Direction::right ? ">" : "<");
  }
  if (auto slo = dynamic_cast<const SlominskiForm*>(&form)) {
    bool tables = true;
    for (const auto& e : z.edges()) tables = tables && e.morphism.has_table();
    if (tables)
      if (auto f = induced_relation(*slo, z).as_function()) m.table = *f;
  }
  v.induces = true;
  v.morphism = std::move(m);
  return v;
}

IsoVerdict decide_isomorphism(const Form& form, const Zigzag& z) {
  IsoVerdict v;
  v.chases[0] = chase_forward(z, bottom(form, z.front())).result == bottom(form, z.back());
  v.chases[1] = chase_forward(z, top(form, z.front())).result == top(form, z.back());
  v.chases[2] = chase_backward(z, bottom(form, z.back())).result == bottom(form, z.front());
  v.chases[3] = chase_backward(z, top(form, z.back())).result == top(form, z.front());
  if (v.chases[0] && v.chases[3]) v.forward = decide_induction(form, z).morphism;
  if (v.chases[1] && v.chases[2]) v.backward = decide_induction(form, z.opposite()).morphism;
  if (v.forward && v.backward) {
    v.mutually_inverse = same_maps(form.compose(*v.backward, *v.forward), form.identity(z.front())) &&
                         same_maps(form.compose(*v.forward, *v.backward), form.identity(z.back()));
  }
  v.iso = v.chases[0] && v.chases[1] && v.chases[2] && v.chases[3];
  return v;
}

QuotientIsoResult quotient_iso(const Form& form, const Morphism& f, Subobject w, Subobject x) {
  if (w.owner != f.dom || x.owner != f.dom)
    throw Error(ErrorKind::ownership, "W and X must live in the domain");
  if (!leq(form, kernel(form, f), w) || !leq(form, w, x))
    throw Error(ErrorKind::validation, "need Ker f <= W <= X");
  if (!form.is_conormal(x)) throw Error(ErrorKind::validation, "X must be conormal");
  QuotientIsoResult r;
  const Subobject fw = direct_image(f, w), fx = direct_image(f, x);
  r.w_normal_in_x = is_relatively_normal(form, w, x);
  r.fw_normal_in_fx = is_relatively_normal(form, fw, fx);
  if (!r.w_normal_in_x || !r.fw_normal_in_fx) return r;
  Morphism iota_x = embedding_of(form, x);
  Morphism pi_w = projection_of(form, inverse_image(iota_x, w));
  Morphism iota_fx = embedding_of(form, fx);
  Morphism pi_fw = projection_of(form, inverse_image(iota_fx, fw));
  r.zigzag = Zigzag::from_edges(pi_w.cod, {{pi_w, Direction::left},
                                           {iota_x, Direction::right},
                                           {f, Direction::right},
                                           {iota_fx, Direction::left},
                                           {pi_fw, Direction::right}});
  r.verdict = decide_isomorphism(form, *r.zigzag);
  return r;
}

}  // namespace noether

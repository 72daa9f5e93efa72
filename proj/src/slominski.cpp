#include "noether/slominski.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <tuple>

namespace noether {

SlominskiAlgebra SlominskiAlgebra::make(std::size_t n, Element zero, std::vector<Element> p,
                                        std::vector<Element> d) {
  if (n == 0 || n > kMaxCarrier)
    throw Error(ErrorKind::validation, "carrier size must be between 1 and 64");
  if (zero >= n) throw Error(ErrorKind::validation, "zero outside the carrier");
  if (p.size() != n * n || d.size() != n * n)
    throw Error(ErrorKind::validation, "operation tables must be n by n");
  for (std::size_t i = 0; i < n * n; ++i)
    if (p[i] >= n || d[i] >= n) throw Error(ErrorKind::validation, "table entry outside the carrier");
  SlominskiAlgebra a;
  a.n_ = n;
  a.zero_ = zero;
  a.p_ = std::move(p);
  a.d_ = std::move(d);
  for (Element x = 0; x < n; ++x) {
    if (a.d(x, x) != zero)
      throw Error(ErrorKind::validation, "d(" + std::to_string(x) + "," + std::to_string(x) +
                                             ") is not zero");
    for (Element y = 0; y < n; ++y)
      if (a.p(a.d(x, y), y) != x)
        throw Error(ErrorKind::validation, "p(d(x,y),y) != x at x=" + std::to_string(x) +
                                               ", y=" + std::to_string(y));
  }
  return a;
}

std::string group_table_problem(const CayleyTable& t) {
  const std::size_t n = t.size();
  if (n == 0) return "empty table";
  for (const auto& row : t) {
    if (row.size() != n) return "table is not square";
    for (Element v : row)
      if (v >= n) return "entry outside the carrier";
  }
  std::optional<Element> e;
  for (Element x = 0; x < n && !e; ++x) {
    bool unit = true;
    for (Element y = 0; y < n; ++y) unit = unit && t[x][y] == y && t[y][x] == y;
    if (unit) e = x;
  }
  if (!e) return "no identity element";
  for (Element x = 0; x < n; ++x) {
    bool has_inverse = false;
    for (Element y = 0; y < n; ++y) has_inverse = has_inverse || (t[x][y] == *e && t[y][x] == *e);
    if (!has_inverse) return "element " + std::to_string(x) + " has no inverse";
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[x][t[y][z]]) return "multiplication is not associative";
  return {};
}

SlominskiAlgebra from_group(const CayleyTable& cayley, const std::vector<Element>& inverse,
                            Element identity) {
  if (auto why = group_table_problem(cayley); !why.empty())
    throw Error(ErrorKind::validation, "not a group: " + why);
  const std::size_t n = cayley.size();
  if (inverse.size() != n || identity >= n)
    throw Error(ErrorKind::validation, "inverse table or identity does not fit the carrier");
  for (Element x = 0; x < n; ++x) {
    if (cayley[identity][x] != x) throw Error(ErrorKind::validation, "wrong identity element");
    if (inverse[x] >= n || cayley[x][inverse[x]] != identity)
      throw Error(ErrorKind::validation, "wrong inverse of " + std::to_string(x));
  }
  std::vector<Element> p(n * n), d(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      p[a * n + b] = cayley[a][b];
      d[a * n + b] = cayley[a][inverse[b]];
    }
  return SlominskiAlgebra::make(n, identity, std::move(p), std::move(d));
}

SlominskiAlgebra from_group(const CayleyTable& cayley) {
  if (auto why = group_table_problem(cayley); !why.empty())
    throw Error(ErrorKind::validation, "not a group: " + why);
  const std::size_t n = cayley.size();
  Element e = 0;
  while (cayley[e][0] != 0 || cayley[0][e] != 0 || cayley[e][e] != e) ++e;
  std::vector<Element> inv(n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (cayley[x][y] == e) inv[x] = y;
  return from_group(cayley, inv, e);
}

CayleyTable cyclic_group(std::size_t n) {
  CayleyTable t(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

CayleyTable dihedral_group(std::size_t n) {
  CayleyTable t(2 * n, std::vector<Element>(2 * n));
  for (Element x = 0; x < 2 * n; ++x)
    for (Element y = 0; y < 2 * n; ++y) {
      std::size_t i = x % n, j = x / n, k = y % n, l = y / n;
      std::size_t rot = j ? (i + n - k) % n : (i + k) % n;
      t[x][y] = rot + n * (j ^ l);
    }
  return t;
}

CayleyTable quaternion_group() {
  // 0..3 = 1, i, j, k; 4..7 their negatives.
  static const int unit[4][4] = {{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}};
  CayleyTable t(8, std::vector<Element>(8));
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) {
      int v = unit[x % 4][y % 4];
      bool negative = (v < 0) != ((x >= 4) != (y >= 4));
      t[x][y] = static_cast<Element>(std::abs(v) - 1 + (negative ? 4 : 0));
    }
  return t;
}

CayleyTable direct_product(const CayleyTable& a, const CayleyTable& b) {
  const std::size_t na = a.size(), nb = b.size();
  CayleyTable t(na * nb, std::vector<Element>(na * nb));
  for (Element x = 0; x < na * nb; ++x)
    for (Element y = 0; y < na * nb; ++y)
      t[x][y] = a[x / nb][y / nb] * nb + b[x % nb][y % nb];
  return t;
}

std::vector<NamedGroup> small_groups() {
  auto z2 = cyclic_group(2);
  return {
      {"Z1", cyclic_group(1)},
      {"Z2", z2},
      {"Z3", cyclic_group(3)},
      {"Z4", cyclic_group(4)},
      {"Z2xZ2", direct_product(z2, z2)},
      {"Z5", cyclic_group(5)},
      {"Z6", cyclic_group(6)},
      {"S3", dihedral_group(3)},
      {"Z7", cyclic_group(7)},
      {"Z8", cyclic_group(8)},
      {"Z4xZ2", direct_product(cyclic_group(4), z2)},
      {"Z2xZ2xZ2", direct_product(direct_product(z2, z2), z2)},
      {"D8", dihedral_group(4)},
      {"Q8", quaternion_group()},
  };
}

std::string mask_key(Mask m) {
  std::string out = "{";
  bool first = true;
  for (Element x : elements(m)) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::vector<Element> elements(Mask m) {
  std::vector<Element> out;
  while (m) {
    out.push_back(static_cast<Element>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

Mask generated_subalgebra(const SlominskiAlgebra& a, Mask seed) {
  Mask m = seed | singleton(a.zero());
  for (bool grew = true; grew;) {
    grew = false;
    const auto xs = elements(m);
    for (Element x : xs)
      for (Element y : xs) {
        Mask add = singleton(a.p(x, y)) | singleton(a.d(x, y));
        if ((m | add) != m) {
          m |= add;
          grew = true;
        }
      }
  }
  return m;
}

bool is_subalgebra(const SlominskiAlgebra& a, Mask m) {
  return (m & ~a.full()) == 0 && generated_subalgebra(a, m) == m;
}

std::vector<Mask> subalgebras(const SlominskiAlgebra& a) {
  std::vector<Mask> found{generated_subalgebra(a, 0)};
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Element x = 0; x < a.size(); ++x) {
      if (contains(found[i], x)) continue;
      Mask next = generated_subalgebra(a, found[i] | singleton(x));
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(next);
    }
  std::sort(found.begin(), found.end(), [](Mask l, Mask r) {
    int pl = std::popcount(l), pr = std::popcount(r);
    return pl != pr ? pl < pr : l < r;
  });
  return found;
}

Mask Congruence::class_of(Element x) const {
  Mask m = 0;
  for (Element y = 0; y < rep.size(); ++y)
    if (rep[y] == rep[x]) m |= singleton(y);
  return m;
}

std::vector<std::vector<Element>> Congruence::classes() const {
  std::vector<std::vector<Element>> out;
  std::vector<std::size_t> slot(rep.size(), static_cast<std::size_t>(-1));
  for (Element x = 0; x < rep.size(); ++x) {
    if (slot[rep[x]] == static_cast<std::size_t>(-1)) {
      slot[rep[x]] = out.size();
      out.emplace_back();
    }
    out[slot[rep[x]]].push_back(x);
  }
  return out;
}

Congruence generate_congruence(const SlominskiAlgebra& a,
                               const std::vector<std::pair<Element, Element>>& pairs) {
  const std::size_t n = a.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Element, Element>> pending(pairs.begin(), pairs.end());
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    if (x >= n || y >= n) throw Error(ErrorKind::validation, "pair outside the carrier");
    Element rx = find(x), ry = find(y);
    if (rx == ry) continue;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    // Compatibility with every translation of p and d.
    for (Element c = 0; c < n; ++c) {
      pending.emplace_back(a.p(x, c), a.p(y, c));
      pending.emplace_back(a.p(c, x), a.p(c, y));
      pending.emplace_back(a.d(x, c), a.d(y, c));
      pending.emplace_back(a.d(c, x), a.d(c, y));
    }
  }
  Congruence c;
  c.rep.resize(n);
  std::vector<Element> least(n, n);
  for (Element x = 0; x < n; ++x) least[find(x)] = std::min(least[find(x)], x);
  for (Element x = 0; x < n; ++x) c.rep[x] = least[find(x)];
  return c;
}

namespace {

Congruence zero_congruence(const SlominskiAlgebra& a, Mask b) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x : elements(b)) pairs.emplace_back(x, a.zero());
  return generate_congruence(a, pairs);
}

}  // namespace

bool is_normal_subalgebra(const SlominskiAlgebra& a, Mask b) {
  if (!is_subalgebra(a, b)) return false;
  return zero_congruence(a, b).class_of(a.zero()) == b;
}

Quotient quotient(const SlominskiAlgebra& a, Mask b) {
  if (!is_normal_subalgebra(a, b))
    throw Error(ErrorKind::unsupported_subobject, mask_key(b) + " is not a normal subalgebra");
  Congruence c = zero_congruence(a, b);
  const std::size_t n = a.size();
  std::vector<Element> rank(n, n);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x)
    if (c.rep[x] == x) {
      rank[x] = reps.size();
      reps.push_back(x);
    }
  const std::size_t m = reps.size();
  std::vector<Element> p(m * m), d(m * m);
  for (Element i = 0; i < m; ++i)
    for (Element j = 0; j < m; ++j) {
      p[i * m + j] = rank[c.rep[a.p(reps[i], reps[j])]];
      d[i * m + j] = rank[c.rep[a.d(reps[i], reps[j])]];
    }
  Quotient q;
  q.algebra = SlominskiAlgebra::make(m, rank[c.rep[a.zero()]], std::move(p), std::move(d));
  q.projection.resize(n);
  for (Element x = 0; x < n; ++x) q.projection[x] = rank[c.rep[x]];
  return q;
}

bool is_hom(const SlominskiAlgebra& a, const SlominskiAlgebra& b,
            const std::vector<Element>& t) {
  if (t.size() != a.size()) return false;
  for (Element v : t)
    if (v >= b.size()) return false;
  if (t[a.zero()] != b.zero()) return false;
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = 0; y < a.size(); ++y)
      if (t[a.p(x, y)] != b.p(t[x], t[y]) || t[a.d(x, y)] != b.d(t[x], t[y])) return false;
  return true;
}

namespace {

class HomSearch {
 public:
  HomSearch(const SlominskiAlgebra& a, const SlominskiAlgebra& b)
      : a_(a), b_(b), map_(a.size(), kUnset) {}

  std::vector<std::vector<Element>> run() {
    if (assign(a_.zero(), b_.zero()) && propagate()) search();
    return std::move(found_);
  }

 private:
  static constexpr Element kUnset = static_cast<Element>(-1);

  bool assign(Element x, Element v) {
    if (map_[x] != kUnset) return map_[x] == v;
    map_[x] = v;
    trail_.push_back(x);
    return true;
  }

  bool propagate() {
    while (queued_ < trail_.size()) {
      Element x = trail_[queued_++];
      for (std::size_t k = 0; k < queued_; ++k) {
        Element y = trail_[k];
        if (!assign(a_.p(x, y), b_.p(map_[x], map_[y])) ||
            !assign(a_.p(y, x), b_.p(map_[y], map_[x])) ||
            !assign(a_.d(x, y), b_.d(map_[x], map_[y])) ||
            !assign(a_.d(y, x), b_.d(map_[y], map_[x])))
          return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      map_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
    queued_ = mark;
  }

  void search() {
    Element x = 0;
    while (x < map_.size() && map_[x] != kUnset) ++x;
    if (x == map_.size()) {
      found_.push_back(map_);
      return;
    }
    const std::size_t mark = trail_.size();
    for (Element v = 0; v < b_.size(); ++v) {
      if (assign(x, v) && propagate()) search();
      undo(mark);
    }
  }

  const SlominskiAlgebra& a_;
  const SlominskiAlgebra& b_;
  std::vector<Element> map_;
  std::vector<Element> trail_;
  std::size_t queued_ = 0;
  std::vector<std::vector<Element>> found_;
};

}  // namespace

std::vector<std::vector<Element>> enumerate_homs(const SlominskiAlgebra& a,
                                                 const SlominskiAlgebra& b) {
  return HomSearch(a, b).run();
}

// SlominskiForm

ObjectId SlominskiForm::add_entry(std::string name, SlominskiAlgebra algebra,
                                  bool declared) const {
  std::lock_guard lock(mu_);
  Entry e;
  e.name = std::move(name);
  e.subs = subalgebras(algebra);
  for (SubIndex i = 0; i < e.subs.size(); ++i) e.index[e.subs[i]] = i;
  std::vector<std::string> keys;
  for (Mask m : e.subs) keys.push_back(mask_key(m));
  const auto& subs = e.subs;
  e.lattice = Lattice::from_order(std::move(keys), [&](SubIndex a, SubIndex b) {
    return (subs[a] & ~subs[b]) == 0;
  });
  e.algebra = std::move(algebra);
  e.declared = declared;
  entries_.push_back(std::move(e));
  return entries_.size() - 1;
}

ObjectId SlominskiForm::add_algebra(std::string name, SlominskiAlgebra algebra) {
  std::lock_guard lock(mu_);
  if (find_object(name)) throw Error(ErrorKind::validation, "duplicate algebra " + name);
  ObjectId x = add_entry(std::move(name), std::move(algebra), true);
  declared_.push_back(identity(x));
  return x;
}

const SlominskiForm::Entry& SlominskiForm::entry(ObjectId x) const {
  std::lock_guard lock(mu_);
  if (x >= entries_.size()) throw Error(ErrorKind::ownership, "unknown object");
  return entries_[x];
}

std::size_t SlominskiForm::object_count() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

bool SlominskiForm::is_declared_object(ObjectId x) const { return entry(x).declared; }
std::string SlominskiForm::object_name(ObjectId x) const { return entry(x).name; }
Lattice SlominskiForm::lattice(ObjectId x) const { return entry(x).lattice; }
const SlominskiAlgebra& SlominskiForm::algebra(ObjectId x) const { return entry(x).algebra; }

Mask SlominskiForm::mask(Subobject s) const { return entry(s.owner).subs.at(s.index); }

Subobject SlominskiForm::subobject(ObjectId x, Mask m) const {
  const Entry& e = entry(x);
  auto it = e.index.find(m);
  if (it == e.index.end())
    throw Error(ErrorKind::unsupported_subobject, mask_key(m) + " is not a subalgebra of " + e.name);
  return {x, it->second};
}

std::optional<ObjectId> SlominskiForm::find_object(const std::string& name) const {
  std::lock_guard lock(mu_);
  for (ObjectId x = 0; x < entries_.size(); ++x)
    if (entries_[x].name == name) return x;
  return std::nullopt;
}

std::optional<Morphism> SlominskiForm::find_morphism(const std::string& label) const {
  std::lock_guard lock(mu_);
  for (const auto& m : declared_)
    if (m.label == label) return m;
  if (auto it = aliases_.find(label); it != aliases_.end()) {
    Morphism m = declared_[it->second];
    m.label = label;
    return m;
  }
  return std::nullopt;
}

void SlominskiForm::fill_maps(Morphism& m) const {
  const Entry& d = entry(m.dom);
  const Entry& c = entry(m.cod);
  m.dimg.resize(d.subs.size());
  for (SubIndex i = 0; i < d.subs.size(); ++i) {
    Mask img = 0;
    for (Mask rest = d.subs[i]; rest; rest &= rest - 1)
      img |= singleton(m.table[static_cast<Element>(std::countr_zero(rest))]);
    m.dimg[i] = c.index.at(img);
  }
  std::vector<Mask> fibre(c.algebra.size(), 0);
  for (Element x = 0; x < d.algebra.size(); ++x) fibre[m.table[x]] |= singleton(x);
  m.iimg.resize(c.subs.size());
  for (SubIndex j = 0; j < c.subs.size(); ++j) {
    Mask pre = 0;
    for (Mask rest = c.subs[j]; rest; rest &= rest - 1)
      pre |= fibre[static_cast<Element>(std::countr_zero(rest))];
    m.iimg[j] = d.index.at(pre);
  }
}

Morphism SlominskiForm::hom(ObjectId dom, ObjectId cod, std::vector<Element> table,
                            std::string label) const {
  if (!is_hom(algebra(dom), algebra(cod), table))
    throw Error(ErrorKind::validation, "map " + (label.empty() ? std::string("<anon>") : label) +
                                           " is not a homomorphism " + object_name(dom) +
                                           " -> " + object_name(cod));
  Morphism m;
  m.dom = dom;
  m.cod = cod;
  m.table = std::move(table);
  m.label = std::move(label);
  fill_maps(m);
  return m;
}

const Morphism& SlominskiForm::declare(Morphism m) {
  std::lock_guard lock(mu_);
  if (!m.has_table()) throw Error(ErrorKind::validation, "declared morphisms need element tables");
  m = hom(m.dom, m.cod, m.table, m.label);
  for (std::size_t i = 0; i < declared_.size(); ++i)
    if (equal(declared_[i], m)) {
      if (!m.label.empty() && m.label != declared_[i].label) aliases_.emplace(m.label, i);
      return declared_[i];
    }
  declared_.push_back(std::move(m));
  return declared_.back();
}

void SlominskiForm::close_under_composition(std::size_t limit) {
  std::lock_guard lock(mu_);
  std::set<std::tuple<ObjectId, ObjectId, std::vector<Element>>> known;
  for (const auto& d : declared_) known.emplace(d.dom, d.cod, d.table);
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t n = declared_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (declared_[j].cod != declared_[i].dom) continue;
        Morphism gf = compose(declared_[i], declared_[j]);
        if (!known.emplace(gf.dom, gf.cod, gf.table).second) continue;
        if (declared_.size() >= limit)
          throw Error(ErrorKind::validation, "composition closure exceeds " + std::to_string(limit));
        declared_.push_back(std::move(gf));
        grew = true;
      }
  }
}

Morphism SlominskiForm::identity(ObjectId x) const {
  const Entry& e = entry(x);
  Morphism id;
  id.dom = id.cod = x;
  id.table.resize(e.algebra.size());
  std::iota(id.table.begin(), id.table.end(), 0);
  id.dimg.resize(e.subs.size());
  std::iota(id.dimg.begin(), id.dimg.end(), 0);
  id.iimg = id.dimg;
  id.label = "id_" + e.name;
  return id;
}

Morphism SlominskiForm::compose(const Morphism& g, const Morphism& f) const {
  if (!f.has_table() || !g.has_table()) return Form::compose(g, f);
  if (f.cod != g.dom)
    throw Error(ErrorKind::composition, "cannot compose " + arrow_name(g) + " after " +
                                            arrow_name(f));
  Morphism r;
  r.dom = f.dom;
  r.cod = g.cod;
  r.table.resize(f.table.size());
  for (Element x = 0; x < f.table.size(); ++x) r.table[x] = g.table[f.table[x]];
  r.label = g.label.empty() ? f.label : f.label.empty() ? g.label : g.label + "." + f.label;
  fill_maps(r);
  return r;
}

bool SlominskiForm::equal(const Morphism& a, const Morphism& b) const {
  if (!same_maps(a, b)) return false;
  if (a.has_table() && b.has_table()) return a.table == b.table;
  return true;
}

bool SlominskiForm::is_normal(Subobject s) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(s.owner, s.index);
  if (auto it = normal_.find(key); it != normal_.end()) return it->second;
  bool n = is_normal_subalgebra(algebra(s.owner), mask(s));
  normal_[key] = n;
  return n;
}

bool SlominskiForm::is_conormal(Subobject s) const {
  entry(s.owner).subs.at(s.index);
  return true;
}

std::optional<Morphism> SlominskiForm::embedding_of(Subobject s) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(s.owner, s.index);
  if (auto it = embeddings_.find(key); it != embeddings_.end()) return it->second;
  const Entry& owner = entry(s.owner);
  Morphism emb;
  if (s.index == owner.lattice.top()) {
    emb = identity(s.owner);
  } else {
    const SlominskiAlgebra& a = owner.algebra;
    const auto xs = elements(owner.subs[s.index]);
    const std::size_t k = xs.size();
    std::vector<Element> pos(a.size(), 0);
    for (Element i = 0; i < k; ++i) pos[xs[i]] = i;
    std::vector<Element> p(k * k), d(k * k);
    for (Element i = 0; i < k; ++i)
      for (Element j = 0; j < k; ++j) {
        p[i * k + j] = pos[a.p(xs[i], xs[j])];
        d[i * k + j] = pos[a.d(xs[i], xs[j])];
      }
    auto sub = SlominskiAlgebra::make(k, pos[a.zero()], std::move(p), std::move(d));
    std::string name = owner.name + owner.lattice.key(s.index);
    ObjectId x = add_entry(name, std::move(sub), false);
    emb = hom(x, s.owner, xs, "iota_" + name);
  }
  embeddings_[key] = emb;
  return emb;
}

std::optional<Morphism> SlominskiForm::projection_of(Subobject s) const {
  std::lock_guard lock(mu_);
  auto key = std::make_pair(s.owner, s.index);
  if (auto it = projections_.find(key); it != projections_.end()) return it->second;
  if (!is_normal(s)) return std::nullopt;
  const Entry& owner = entry(s.owner);
  Morphism proj;
  if (s.index == owner.lattice.bottom()) {
    proj = identity(s.owner);
  } else {
    Quotient q = quotient(owner.algebra, owner.subs[s.index]);
    std::string name = owner.name + "/" + owner.lattice.key(s.index);
    ObjectId x = add_entry(name, std::move(q.algebra), false);
    proj = hom(s.owner, x, std::move(q.projection), "pi_" + name);
  }
  projections_[key] = proj;
  return proj;
}

std::vector<Element> SlominskiForm::require_table(const Morphism& m) const {
  if (!m.has_table())
    throw Error(ErrorKind::unsupported_form, arrow_name(m) + " has no element realization");
  return m.table;
}

std::vector<Morphism> SlominskiForm::lifts(const Morphism& emb, const Morphism& f) const {
  std::vector<Morphism> out;
  if (emb.cod != f.cod) return out;
  const auto e = require_table(emb);
  const auto t = require_table(f);
  const std::size_t n = algebra(emb.dom).size();
  std::vector<Element> back(algebra(emb.cod).size(), n);
  bool injective = true;
  for (Element x = 0; x < n; ++x) {
    if (back[e[x]] != n) injective = false;
    back[e[x]] = x;
  }
  if (injective) {
    std::vector<Element> u(t.size());
    for (Element x = 0; x < t.size(); ++x) {
      if (back[t[x]] == n) return out;
      u[x] = back[t[x]];
    }
    if (is_hom(algebra(f.dom), algebra(emb.dom), u)) out.push_back(hom(f.dom, emb.dom, u));
    return out;
  }
  for (auto& u : enumerate_homs(algebra(f.dom), algebra(emb.dom))) {
    bool ok = true;
    for (Element x = 0; x < u.size() && ok; ++x) ok = e[u[x]] == t[x];
    if (ok) out.push_back(hom(f.dom, emb.dom, std::move(u)));
  }
  return out;
}

std::vector<Morphism> SlominskiForm::descents(const Morphism& proj, const Morphism& f) const {
  std::vector<Morphism> out;
  if (proj.dom != f.dom) return out;
  const auto p = require_table(proj);
  const auto t = require_table(f);
  const std::size_t m = algebra(proj.cod).size();
  const Element unset = algebra(f.cod).size();
  std::vector<Element> v(m, unset);
  bool surjective = true;
  for (Element x = 0; x < p.size(); ++x) {
    if (v[p[x]] != unset && v[p[x]] != t[x]) return out;  // not constant on fibres
    v[p[x]] = t[x];
  }
  for (Element y = 0; y < m; ++y) surjective = surjective && v[y] != unset;
  if (surjective) {
    if (is_hom(algebra(proj.cod), algebra(f.cod), v)) out.push_back(hom(proj.cod, f.cod, v));
    return out;
  }
  for (auto& w : enumerate_homs(algebra(proj.cod), algebra(f.cod))) {
    bool ok = true;
    for (Element x = 0; x < p.size() && ok; ++x) ok = w[p[x]] == t[x];
    if (ok) out.push_back(hom(proj.cod, f.cod, std::move(w)));
  }
  return out;
}

std::vector<Morphism> SlominskiForm::morphisms() const {
  std::lock_guard lock(mu_);
  return declared_;
}

std::shared_ptr<SlominskiForm> as_form(
    const std::vector<std::pair<std::string, SlominskiAlgebra>>& algebras,
    const std::vector<HomSpec>& homs, std::string name) {
  auto form = std::make_shared<SlominskiForm>(std::move(name));
  std::vector<ObjectId> ids;
  for (const auto& [n, a] : algebras) ids.push_back(form->add_algebra(n, a));
  for (const auto& h : homs) {
    if (h.dom >= ids.size() || h.cod >= ids.size())
      throw Error(ErrorKind::validation, "hom " + h.label + " refers to an unknown algebra");
    form->declare(form->hom(ids[h.dom], ids[h.cod], h.table, h.label));
  }
  const auto declared = form->morphisms();
  std::set<std::tuple<ObjectId, ObjectId, std::vector<Element>>> known;
  for (const auto& d : declared) known.emplace(d.dom, d.cod, d.table);
  for (const auto& f : declared)
    for (const auto& g : declared) {
      if (g.dom != f.cod) continue;
      Morphism gf = form->compose(g, f);
      if (!known.count({gf.dom, gf.cod, gf.table}))
        throw Error(ErrorKind::validation, "closure violation: " + g.label + " after " + f.label);
    }
  return form;
}

}  // namespace noether

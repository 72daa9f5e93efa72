#include "noether/form.hpp"

#include <utility>

namespace noether {

Morphism Morphism::opposite() const {
  Morphism r;
  r.dom = cod;
  r.cod = dom;
  r.dimg = iimg;
  r.iimg = dimg;
  r.table = table;
  r.reversed = !reversed;
  r.label = label;
  return r;
}

bool same_maps(const Morphism& a, const Morphism& b) {
  return a.dom == b.dom && a.cod == b.cod && a.dimg == b.dimg && a.iimg == b.iimg;
}

std::string Form::sub_name(Subobject s) const {
  return object_name(s.owner) + ":" + lattice(s.owner).key(s.index);
}

std::string Form::arrow_name(const Morphism& f) const {
  std::string head = f.label.empty() ? std::string("<anon>") : f.label;
  return head + ": " + object_name(f.dom) + " -> " + object_name(f.cod);
}

namespace {

void require_composable(const Form& form, const Morphism& g, const Morphism& f) {
  if (f.cod != g.dom)
    throw Error(ErrorKind::composition, "cannot compose " + form.arrow_name(g) +
                                            " after " + form.arrow_name(f));
}

std::string compose_label(const Morphism& g, const Morphism& f) {
  if (g.label.empty()) return f.label;
  if (f.label.empty()) return g.label;
  return g.label + "." + f.label;
}

}  // namespace

Morphism Form::compose(const Morphism& g, const Morphism& f) const {
  require_composable(*this, g, f);
  Morphism r;
  r.dom = f.dom;
  r.cod = g.cod;
  r.dimg.resize(f.dimg.size());
  for (std::size_t i = 0; i < f.dimg.size(); ++i) r.dimg[i] = g.dimg.at(f.dimg[i]);
  r.iimg.resize(g.iimg.size());
  for (std::size_t j = 0; j < g.iimg.size(); ++j) r.iimg[j] = f.iimg.at(g.iimg[j]);
  if (f.has_table() && g.has_table()) {
    r.table.resize(f.table.size());
    for (std::size_t x = 0; x < f.table.size(); ++x) r.table[x] = g.table.at(f.table[x]);
  }
  r.label = compose_label(g, f);
  return r;
}

Morphism Form::inverse(const Morphism& iso) const {
  if (!is_isomorphism(*this, iso))
    throw Error(ErrorKind::not_collapsible, arrow_name(iso) + " is not an isomorphism");
  Morphism r;
  r.dom = iso.cod;
  r.cod = iso.dom;
  r.dimg = iso.iimg;
  r.iimg = iso.dimg;
  r.reversed = iso.reversed;
  if (iso.has_table()) {
    r.table.assign(iso.table.size(), 0);
    for (std::size_t x = 0; x < iso.table.size(); ++x) r.table[iso.table[x]] = x;
  }
  r.label = iso.label.empty() ? std::string() : iso.label + "^-1";
  return r;
}

std::optional<Factorization> Form::try_factorize(const Morphism& f) const {
  auto e = projection_of(kernel(*this, f));
  auto m = embedding_of(image(*this, f));
  if (!e || !m) return std::nullopt;
  auto vs = descents(*e, f);
  if (vs.empty()) return std::nullopt;
  auto hs = lifts(*m, vs.front());
  if (hs.empty()) return std::nullopt;
  return Factorization{std::move(*e), std::move(hs.front()), std::move(*m)};
}

Subobject bottom(const Form& form, ObjectId x) { return {x, form.lattice(x).bottom()}; }
Subobject top(const Form& form, ObjectId x) { return {x, form.lattice(x).top()}; }

Subobject join(const Form& form, Subobject a, Subobject b) {
  if (a.owner != b.owner) throw Error(ErrorKind::ownership, "join across objects");
  return {a.owner, form.lattice(a.owner).join(a.index, b.index)};
}

Subobject meet(const Form& form, Subobject a, Subobject b) {
  if (a.owner != b.owner) throw Error(ErrorKind::ownership, "meet across objects");
  return {a.owner, form.lattice(a.owner).meet(a.index, b.index)};
}

bool leq(const Form& form, Subobject a, Subobject b) {
  if (a.owner != b.owner) throw Error(ErrorKind::ownership, "comparison across objects");
  return form.lattice(a.owner).leq(a.index, b.index);
}

Morphism compose(const Form& form, const Morphism& g, const Morphism& f) {
  return form.compose(g, f);
}

Subobject direct_image(const Morphism& f, Subobject a) {
  if (a.owner != f.dom) throw Error(ErrorKind::ownership, "subobject not in domain");
  return {f.cod, f.dimg.at(a.index)};
}

Subobject inverse_image(const Morphism& f, Subobject b) {
  if (b.owner != f.cod) throw Error(ErrorKind::ownership, "subobject not in codomain");
  return {f.dom, f.iimg.at(b.index)};
}

Subobject kernel(const Form& form, const Morphism& f) {
  return inverse_image(f, bottom(form, f.cod));
}

Subobject image(const Form& form, const Morphism& f) {
  return direct_image(f, top(form, f.dom));
}

bool is_injective(const Form& form, const Morphism& f) {
  return kernel(form, f) == bottom(form, f.dom);
}

bool is_surjective(const Form& form, const Morphism& f) {
  return image(form, f) == top(form, f.cod);
}

bool is_isomorphism(const Form& form, const Morphism& f) {
  return is_injective(form, f) && is_surjective(form, f);
}

bool is_zero(const Form& form, const Morphism& f) {
  return image(form, f) == bottom(form, f.cod);
}

Morphism embedding_of(const Form& form, Subobject s) {
  if (!form.is_conormal(s))
    throw Error(ErrorKind::unsupported_subobject, form.sub_name(s) + " is not conormal");
  auto m = form.embedding_of(s);
  if (!m) throw Error(ErrorKind::unsupported_subobject, "no embedding for " + form.sub_name(s));
  return *m;
}

Morphism projection_of(const Form& form, Subobject s) {
  if (!form.is_normal(s))
    throw Error(ErrorKind::unsupported_subobject, form.sub_name(s) + " is not normal");
  auto p = form.projection_of(s);
  if (!p) throw Error(ErrorKind::unsupported_subobject, "no projection for " + form.sub_name(s));
  return *p;
}

Factorization factorize(const Form& form, const Morphism& f) {
  auto r = form.try_factorize(f);
  if (!r) throw Error(ErrorKind::unsupported_form, "cannot factorize " + form.arrow_name(f));
  return *r;
}

RmlCheck restricted_modular_law_check(const Form& form, Subobject x, Subobject y,
                                      Subobject z) {
  if (x.owner != y.owner || y.owner != z.owner)
    throw Error(ErrorKind::ownership, "modular law across objects");
  RmlCheck r;
  if (!leq(form, x, z)) return r;
  r.hypotheses_met = (form.is_normal(y) && form.is_conormal(z)) ||
                     (form.is_conormal(y) && form.is_normal(x));
  if (!r.hypotheses_met) return r;
  r.holds = join(form, x, meet(form, y, z)) == meet(form, join(form, x, y), z);
  return r;
}

bool is_relatively_normal(const Form& form, Subobject b, Subobject a) {
  if (a.owner != b.owner) throw Error(ErrorKind::ownership, "relative normality across objects");
  if (!leq(form, b, a) || !form.is_conormal(a)) return false;
  auto emb = form.embedding_of(a);
  if (!emb) return false;
  return form.is_normal(inverse_image(*emb, b));
}

namespace {

class DualForm final : public Form {
 public:
  explicit DualForm(FormPtr base) : base_(std::move(base)) {}

  std::string name() const override { return base_->name() + "^op"; }
  std::size_t object_count() const override { return base_->object_count(); }
  bool is_declared_object(ObjectId x) const override { return base_->is_declared_object(x); }
  std::string object_name(ObjectId x) const override { return base_->object_name(x); }
  Lattice lattice(ObjectId x) const override { return base_->lattice(x).dual(); }
  Morphism identity(ObjectId x) const override { return base_->identity(x).opposite(); }

  Morphism compose(const Morphism& g, const Morphism& f) const override {
    if (f.cod != g.dom)
      throw Error(ErrorKind::composition, "cannot compose " + arrow_name(g) + " after " +
                                              arrow_name(f));
    Morphism r = base_->compose(f.opposite(), g.opposite()).opposite();
    r.label = g.label.empty() ? f.label : f.label.empty() ? g.label : g.label + "." + f.label;
    return r;
  }

  Morphism inverse(const Morphism& iso) const override {
    return base_->inverse(iso.opposite()).opposite();
  }

  bool is_normal(Subobject s) const override { return base_->is_conormal(s); }
  bool is_conormal(Subobject s) const override { return base_->is_normal(s); }

  std::optional<Morphism> embedding_of(Subobject s) const override {
    auto p = base_->projection_of(s);
    if (!p) return std::nullopt;
    return p->opposite();
  }

  std::optional<Morphism> projection_of(Subobject s) const override {
    auto e = base_->embedding_of(s);
    if (!e) return std::nullopt;
    return e->opposite();
  }

  std::vector<Morphism> lifts(const Morphism& emb, const Morphism& f) const override {
    return flip_all(base_->descents(emb.opposite(), f.opposite()));
  }

  std::vector<Morphism> descents(const Morphism& proj, const Morphism& f) const override {
    return flip_all(base_->lifts(proj.opposite(), f.opposite()));
  }

  std::vector<Morphism> morphisms() const override { return flip_all(base_->morphisms()); }

  bool equal(const Morphism& a, const Morphism& b) const override {
    return base_->equal(a.opposite(), b.opposite());
  }

  FormPtr dual_base() const override { return base_; }

 private:
  static std::vector<Morphism> flip_all(std::vector<Morphism> v) {
    for (auto& m : v) m = m.opposite();
    return v;
  }

  FormPtr base_;
};

}  // namespace

FormPtr dualize(const FormPtr& form) {
  if (auto base = form->dual_base()) return base;
  return std::make_shared<DualForm>(form);
}

}  // namespace noether

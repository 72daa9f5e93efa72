#include "noether/finite_form.hpp"

namespace noether {

ObjectId FiniteForm::add_object(std::string name, Lattice lattice) {
  if (find_object(name)) throw Error(ErrorKind::validation, "duplicate object " + name);
  objects_.push_back({std::move(name), std::move(lattice)});
  return objects_.size() - 1;
}

const Morphism& FiniteForm::add_morphism(Morphism m) {
  if (m.dom >= objects_.size() || m.cod >= objects_.size())
    throw Error(ErrorKind::validation, "morphism " + m.label + " has unknown endpoints");
  if (m.dimg.size() != objects_[m.dom].lattice.size() ||
      m.iimg.size() != objects_[m.cod].lattice.size())
    throw Error(ErrorKind::validation, "morphism " + m.label + " must map every subobject");
  m.table.clear();
  m.reversed = false;
  if (const Morphism* same = declared(m)) {
    if (!m.label.empty() && m.label != same->label)
      aliases_[m.label] = static_cast<std::size_t>(same - morphisms_.data());
    return *same;
  }
  morphisms_.push_back(std::move(m));
  return morphisms_.back();
}

void FiniteForm::add_missing_identities() {
  for (ObjectId x = 0; x < objects_.size(); ++x) add_morphism(identity(x));
}

std::optional<ObjectId> FiniteForm::find_object(const std::string& name) const {
  for (ObjectId x = 0; x < objects_.size(); ++x)
    if (objects_[x].name == name) return x;
  return std::nullopt;
}

std::optional<Morphism> FiniteForm::find_morphism(const std::string& label) const {
  for (const auto& m : morphisms_)
    if (m.label == label) return m;
  if (auto it = aliases_.find(label); it != aliases_.end()) {
    Morphism m = morphisms_[it->second];
    m.label = label;
    return m;
  }
  return std::nullopt;
}

Morphism FiniteForm::identity(ObjectId x) const {
  Morphism id;
  id.dom = id.cod = x;
  const std::size_t n = objects_.at(x).lattice.size();
  id.dimg.resize(n);
  for (SubIndex i = 0; i < n; ++i) id.dimg[i] = i;
  id.iimg = id.dimg;
  id.label = "id_" + objects_[x].name;
  for (const auto& m : morphisms_)
    if (same_maps(m, id)) id.label = m.label;
  return id;
}

const Morphism* FiniteForm::declared(const Morphism& m) const {
  for (const auto& d : morphisms_)
    if (same_maps(d, m)) return &d;
  return nullptr;
}

Morphism FiniteForm::compose(const Morphism& g, const Morphism& f) const {
  Morphism r = Form::compose(g, f);
  if (const Morphism* d = declared(r)) r.label = d->label;
  return r;
}

bool FiniteForm::is_normal(Subobject s) const {
  for (const auto& m : morphisms_)
    if (m.dom == s.owner && kernel(*this, m) == s) return true;
  return false;
}

bool FiniteForm::is_conormal(Subobject s) const {
  for (const auto& m : morphisms_)
    if (m.cod == s.owner && image(*this, m) == s) return true;
  return false;
}

std::optional<Morphism> FiniteForm::embedding_of(Subobject s) const {
  const Lattice& l = objects_.at(s.owner).lattice;
  for (const auto& m : morphisms_) {
    if (m.cod != s.owner || image(*this, m) != s) continue;
    bool universal = true;
    for (const auto& f : morphisms_) {
      if (f.cod != s.owner || !l.leq(image(*this, f).index, s.index)) continue;
      if (lifts(m, f).size() != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return m;
  }
  return std::nullopt;
}

std::optional<Morphism> FiniteForm::projection_of(Subobject s) const {
  const Lattice& l = objects_.at(s.owner).lattice;
  for (const auto& p : morphisms_) {
    if (p.dom != s.owner || kernel(*this, p) != s) continue;
    bool universal = true;
    for (const auto& f : morphisms_) {
      if (f.dom != s.owner || !l.leq(s.index, kernel(*this, f).index)) continue;
      if (descents(p, f).size() != 1) {
        universal = false;
        break;
      }
    }
    if (universal) return p;
  }
  return std::nullopt;
}

std::vector<Morphism> FiniteForm::lifts(const Morphism& emb, const Morphism& f) const {
  std::vector<Morphism> out;
  if (emb.cod != f.cod) return out;
  for (const auto& u : morphisms_)
    if (u.dom == f.dom && u.cod == emb.dom && same_maps(Form::compose(emb, u), f))
      out.push_back(u);
  return out;
}

std::vector<Morphism> FiniteForm::descents(const Morphism& proj, const Morphism& f) const {
  std::vector<Morphism> out;
  if (proj.dom != f.dom) return out;
  for (const auto& v : morphisms_)
    if (v.dom == proj.cod && v.cod == f.cod && same_maps(Form::compose(v, proj), f))
      out.push_back(v);
  return out;
}

}  // namespace noether

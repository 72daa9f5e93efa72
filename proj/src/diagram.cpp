#include "noether/diagram.hpp"

#include <sstream>

namespace noether {

Path parse_path(const std::string& text) {
  Path p;
  std::string cur;
  for (char c : text) {
    if (c == '.') {
      if (cur.empty()) throw Error(ErrorKind::parse, "empty step in path '" + text + "'");
      p.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.empty()) throw Error(ErrorKind::parse, "empty step in path '" + text + "'");
  p.push_back(cur);
  return p;
}

std::string path_text(const Path& p) {
  std::string out;
  for (const auto& s : p) out += (out.empty() ? "" : ".") + s;
  return out;
}

namespace {

Path reversed(const Path& p) { return Path(p.rbegin(), p.rend()); }

SubExprPtr make(SubExpr::Kind k, Path path, std::string object, std::vector<SubExprPtr> args) {
  return std::make_shared<const SubExpr>(SubExpr{k, std::move(path), std::move(object), std::move(args)});
}

std::string wrap(const std::string& path) {
  return path.find('.') == std::string::npos ? path : "(" + path + ")";
}

}  // namespace

std::string SubExpr::text() const {
  switch (kind) {
    case Kind::ker: return "Ker " + wrap(path_text(path));
    case Kind::im: return "Im " + wrap(path_text(path));
    case Kind::top: return "top " + object;
    case Kind::bottom: return "bot " + object;
    case Kind::dimg: return wrap(path_text(path)) + "(" + args[0]->text() + ")";
    case Kind::iimg: return wrap(path_text(path)) + "^-1(" + args[0]->text() + ")";
    case Kind::join: return "(" + args[0]->text() + " join " + args[1]->text() + ")";
    case Kind::meet: return "(" + args[0]->text() + " meet " + args[1]->text() + ")";
  }
  return {};
}

SubExprPtr ker(const std::string& path) { return make(SubExpr::Kind::ker, parse_path(path), {}, {}); }
SubExprPtr im(const std::string& path) { return make(SubExpr::Kind::im, parse_path(path), {}, {}); }
SubExprPtr top_of(const std::string& object) { return make(SubExpr::Kind::top, {}, object, {}); }
SubExprPtr bottom_of(const std::string& object) { return make(SubExpr::Kind::bottom, {}, object, {}); }
SubExprPtr dimg(const std::string& path, SubExprPtr arg) {
  return make(SubExpr::Kind::dimg, parse_path(path), {}, {std::move(arg)});
}
SubExprPtr iimg(const std::string& path, SubExprPtr arg) {
  return make(SubExpr::Kind::iimg, parse_path(path), {}, {std::move(arg)});
}
SubExprPtr join(SubExprPtr a, SubExprPtr b) {
  return make(SubExpr::Kind::join, {}, {}, {std::move(a), std::move(b)});
}
SubExprPtr meet(SubExprPtr a, SubExprPtr b) {
  return make(SubExpr::Kind::meet, {}, {}, {std::move(a), std::move(b)});
}

std::string Assertion::text() const {
  switch (kind) {
    case Kind::commute: return "commute " + path_text(lhs) + " = " + path_text(rhs);
    case Kind::exact: return "exact " + path_text(lhs) + " " + path_text(rhs);
    case Kind::short_exact: return "short-exact " + path_text(lhs) + " " + path_text(rhs);
    case Kind::injective: return "injective " + path_text(lhs);
    case Kind::surjective: return "surjective " + path_text(lhs);
    case Kind::iso: return "iso " + path_text(lhs);
    case Kind::zero: return "zero " + path_text(lhs);
    case Kind::sub_eq: return a->text() + " = " + b->text();
    case Kind::sub_leq: return a->text() + " <= " + b->text();
    case Kind::normal: return "normal " + a->text();
    case Kind::conormal: return "conormal " + a->text();
    case Kind::normal_in: return a->text() + " normal in " + b->text();
  }
  return {};
}

namespace {

Assertion paths(Assertion::Kind k, Path lhs, Path rhs = {}) {
  return Assertion{k, std::move(lhs), std::move(rhs), nullptr, nullptr};
}

Assertion subs(Assertion::Kind k, SubExprPtr a, SubExprPtr b = nullptr) {
  return Assertion{k, {}, {}, std::move(a), std::move(b)};
}

}  // namespace

Assertion commute(const std::string& l, const std::string& r) {
  return paths(Assertion::Kind::commute, parse_path(l), parse_path(r));
}
Assertion exact(const std::string& f, const std::string& g) {
  return paths(Assertion::Kind::exact, parse_path(f), parse_path(g));
}
Assertion short_exact(const std::string& f, const std::string& g) {
  return paths(Assertion::Kind::short_exact, parse_path(f), parse_path(g));
}
Assertion injective(const std::string& f) { return paths(Assertion::Kind::injective, parse_path(f)); }
Assertion surjective(const std::string& f) { return paths(Assertion::Kind::surjective, parse_path(f)); }
Assertion iso(const std::string& f) { return paths(Assertion::Kind::iso, parse_path(f)); }
Assertion zero(const std::string& p) { return paths(Assertion::Kind::zero, parse_path(p)); }
Assertion sub_eq(SubExprPtr a, SubExprPtr b) { return subs(Assertion::Kind::sub_eq, a, b); }
Assertion sub_leq(SubExprPtr a, SubExprPtr b) { return subs(Assertion::Kind::sub_leq, a, b); }
Assertion normal(SubExprPtr a) { return subs(Assertion::Kind::normal, a); }
Assertion conormal(SubExprPtr a) { return subs(Assertion::Kind::conormal, a); }
Assertion normal_in(SubExprPtr lower, SubExprPtr upper) {
  return subs(Assertion::Kind::normal_in, lower, upper);
}

ObjectId Diagram::object(const std::string& role) const {
  auto it = objects.find(role);
  if (it == objects.end()) throw Error(ErrorKind::shape_mismatch, "missing object " + role);
  return it->second;
}

const Morphism& Diagram::arrow(const std::string& role) const {
  auto it = arrows.find(role);
  if (it == arrows.end()) throw Error(ErrorKind::shape_mismatch, "missing arrow " + role);
  return it->second;
}

Morphism Diagram::path(const Path& p) const {
  if (p.empty()) throw Error(ErrorKind::shape_mismatch, "empty path");
  Morphism acc = arrow(p.back());
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) acc = form->compose(arrow(*it), acc);
  return acc;
}

Subobject Diagram::eval(const SubExpr& e) const {
  switch (e.kind) {
    case SubExpr::Kind::ker: return kernel(*form, path(e.path));
    case SubExpr::Kind::im: return image(*form, path(e.path));
    case SubExpr::Kind::top: return top(*form, object(e.object));
    case SubExpr::Kind::bottom: return bottom(*form, object(e.object));
    case SubExpr::Kind::dimg: return direct_image(path(e.path), eval(*e.args[0]));
    case SubExpr::Kind::iimg: return inverse_image(path(e.path), eval(*e.args[0]));
    case SubExpr::Kind::join: return noether::join(*form, eval(*e.args[0]), eval(*e.args[1]));
    case SubExpr::Kind::meet: return noether::meet(*form, eval(*e.args[0]), eval(*e.args[1]));
  }
  throw Error(ErrorKind::validation, "bad expression");
}

std::string CheckLine::text() const {
  std::string s = status == Status::pass ? "PASS" : status == Status::fail ? "FAIL" : "SKIP";
  s += " " + name;
  if (!witness.empty()) s += " " + witness;
  return s;
}

bool LemmaReport::hypotheses_hold() const {
  for (const auto& l : hypotheses)
    if (l.status != CheckLine::Status::pass) return false;
  return true;
}

bool LemmaReport::conclusions_hold() const {
  for (const auto& l : conclusions)
    if (l.status != CheckLine::Status::pass) return false;
  return true;
}

std::string LemmaReport::to_text() const {
  std::ostringstream out;
  for (const auto& l : hypotheses) out << l.text() << "\n";
  for (const auto& l : conclusions) out << l.text() << "\n";
  return out.str();
}

bool is_exact_at(const Form& form, const Morphism& f, const Morphism& g) {
  if (f.cod != g.dom) throw Error(ErrorKind::composition, "exactness needs cod f = dom g");
  return image(form, f) == kernel(form, g);
}

bool is_short_exact(const Form& form, const Morphism& f, const Morphism& g) {
  return is_exact_at(form, f, g) && is_injective(form, f) && is_surjective(form, g);
}

CheckLine check(const Diagram& d, const Assertion& a) {
  using K = Assertion::Kind;
  const Form& form = *d.form;
  CheckLine line;
  line.name = a.text();
  auto verdict = [&](bool ok, std::string witness = {}) {
    line.status = ok ? CheckLine::Status::pass : CheckLine::Status::fail;
    if (!ok) line.witness = std::move(witness);
  };
  auto show = [&](Subobject s) { return form.sub_name(s); };
  try {
    switch (a.kind) {
      case K::commute: {
        Morphism l = d.path(a.lhs), r = d.path(a.rhs);
        if (l.dom != r.dom || l.cod != r.cod) {
          verdict(false, "paths have different endpoints");
          break;
        }
        std::string where;
        for (SubIndex s = 0; s < l.dimg.size() && where.empty(); ++s)
          if (l.dimg[s] != r.dimg[s]) where = "direct images differ at " + show({l.dom, s});
        for (SubIndex s = 0; s < l.iimg.size() && where.empty(); ++s)
          if (l.iimg[s] != r.iimg[s]) where = "inverse images differ at " + show({l.cod, s});
        if (where.empty() && !form.equal(l, r)) where = "element maps differ";
        verdict(where.empty(), where);
        break;
      }
      case K::exact:
      case K::short_exact: {
        Morphism f = d.path(a.lhs), g = d.path(a.rhs);
        if (f.cod != g.dom) {
          verdict(false, "not composable");
          break;
        }
        Subobject i = image(form, f), k = kernel(form, g);
        line.values = {i, k};
        std::string why;
        if (i != k) why = "Im = " + show(i) + " but Ker = " + show(k);
        if (why.empty() && a.kind == K::short_exact) {
          if (!is_injective(form, f)) why = "first map not injective";
          else if (!is_surjective(form, g)) why = "second map not surjective";
        }
        verdict(why.empty(), why);
        break;
      }
      case K::injective: {
        Morphism f = d.path(a.lhs);
        line.values = {kernel(form, f)};
        verdict(is_injective(form, f), "Ker = " + show(kernel(form, f)));
        break;
      }
      case K::surjective: {
        Morphism f = d.path(a.lhs);
        line.values = {image(form, f)};
        verdict(is_surjective(form, f), "Im = " + show(image(form, f)));
        break;
      }
      case K::iso: {
        Morphism f = d.path(a.lhs);
        line.values = {kernel(form, f), image(form, f)};
        verdict(is_isomorphism(form, f),
                "Ker = " + show(kernel(form, f)) + ", Im = " + show(image(form, f)));
        break;
      }
      case K::zero: {
        Morphism f = d.path(a.lhs);
        line.values = {image(form, f)};
        verdict(is_zero(form, f), "Im = " + show(image(form, f)));
        break;
      }
      case K::sub_eq:
      case K::sub_leq: {
        Subobject x = d.eval(*a.a), y = d.eval(*a.b);
        line.values = {x, y};
        bool ok = a.kind == K::sub_eq ? x == y : (x.owner == y.owner && leq(form, x, y));
        verdict(ok, show(x) + " vs " + show(y));
        break;
      }
      case K::normal: {
        Subobject x = d.eval(*a.a);
        line.values = {x};
        verdict(form.is_normal(x), show(x));
        break;
      }
      case K::conormal: {
        Subobject x = d.eval(*a.a);
        line.values = {x};
        verdict(form.is_conormal(x), show(x));
        break;
      }
      case K::normal_in: {
        Subobject x = d.eval(*a.a), y = d.eval(*a.b);
        line.values = {x, y};
        verdict(x.owner == y.owner && is_relatively_normal(form, x, y), show(x) + " in " + show(y));
        break;
      }
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::shape_mismatch) throw;
    verdict(false, e.what());
  }
  return line;
}

LemmaReport verify_generic(const Diagram& d, const std::vector<Assertion>& conclusions,
                           const std::string& lemma) {
  LemmaReport r;
  r.lemma = lemma;
  for (const auto& h : d.hypotheses) r.hypotheses.push_back(check(d, h));
  const bool ok = r.hypotheses_hold();
  for (const auto& c : conclusions) {
    if (ok) {
      r.conclusions.push_back(check(d, c));
    } else {
      r.conclusions.push_back(CheckLine{CheckLine::Status::skip, c.text(), {}, {}});
    }
  }
  for (const auto& l : r.hypotheses)
    if (l.status == CheckLine::Status::fail && r.witness.empty())
      r.witness = "hypothesis failed: " + l.name;
  if (ok)
    for (const auto& l : r.conclusions)
      if (l.status == CheckLine::Status::fail && r.witness.empty())
        r.witness = "counterexample: " + l.name + " " + l.witness;
  return r;
}

SubExprPtr dualize(const SubExprPtr& e) {
  using K = SubExpr::Kind;
  switch (e->kind) {
    case K::ker: return make(K::im, reversed(e->path), {}, {});
    case K::im: return make(K::ker, reversed(e->path), {}, {});
    case K::top: return make(K::bottom, {}, e->object, {});
    case K::bottom: return make(K::top, {}, e->object, {});
    case K::dimg: return make(K::iimg, reversed(e->path), {}, {dualize(e->args[0])});
    case K::iimg: return make(K::dimg, reversed(e->path), {}, {dualize(e->args[0])});
    case K::join: return make(K::meet, {}, {}, {dualize(e->args[0]), dualize(e->args[1])});
    case K::meet: return make(K::join, {}, {}, {dualize(e->args[0]), dualize(e->args[1])});
  }
  return e;
}

Assertion dualize(const Assertion& a) {
  using K = Assertion::Kind;
  switch (a.kind) {
    case K::commute: return paths(K::commute, reversed(a.lhs), reversed(a.rhs));
    case K::exact: return paths(K::exact, reversed(a.rhs), reversed(a.lhs));
    case K::short_exact: return paths(K::short_exact, reversed(a.rhs), reversed(a.lhs));
    case K::injective: return paths(K::surjective, reversed(a.lhs));
    case K::surjective: return paths(K::injective, reversed(a.lhs));
    case K::iso: return paths(K::iso, reversed(a.lhs));
    case K::zero: return paths(K::zero, reversed(a.lhs));
    case K::sub_eq: return subs(K::sub_eq, dualize(a.a), dualize(a.b));
    case K::sub_leq: return subs(K::sub_leq, dualize(a.b), dualize(a.a));
    case K::normal: return subs(K::conormal, dualize(a.a));
    case K::conormal: return subs(K::normal, dualize(a.a));
    case K::normal_in: break;
  }
  throw Error(ErrorKind::validation, "no dual statement for " + a.text());
}

Diagram dualize(const Diagram& d) {
  Diagram r;
  r.name = d.name + "^op";
  r.form = noether::dualize(d.form);
  r.objects = d.objects;
  for (const auto& [role, m] : d.arrows) r.arrows[role] = m.opposite();
  for (const auto& h : d.hypotheses) r.hypotheses.push_back(dualize(h));
  return r;
}

namespace {

Path rename(const Path& p, const std::map<std::string, std::string>& names) {
  Path out;
  for (const auto& s : p) {
    auto it = names.find(s);
    out.push_back(it == names.end() ? s : it->second);
  }
  return out;
}

SubExprPtr rename(const SubExprPtr& e, const std::map<std::string, std::string>& names) {
  if (!e) return e;
  std::vector<SubExprPtr> args;
  for (const auto& a : e->args) args.push_back(rename(a, names));
  auto it = names.find(e->object);
  return make(e->kind, rename(e->path, names), it == names.end() ? e->object : it->second,
              std::move(args));
}

}  // namespace

Diagram rename_roles(const Diagram& d, const std::map<std::string, std::string>& names) {
  auto name_of = [&](const std::string& s) {
    auto it = names.find(s);
    return it == names.end() ? s : it->second;
  };
  Diagram r;
  r.name = d.name;
  r.form = d.form;
  for (const auto& [role, x] : d.objects) r.objects[name_of(role)] = x;
  for (const auto& [role, m] : d.arrows) r.arrows[name_of(role)] = m;
  for (const auto& h : d.hypotheses)
    r.hypotheses.push_back(Assertion{h.kind, rename(h.lhs, names), rename(h.rhs, names),
                                     rename(h.a, names), rename(h.b, names)});
  return r;
}

}  // namespace noether

#include "noether/workspace.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace noether {

std::string Location::text() const {
  std::ostringstream out;
  out << (file.empty() ? "<input>" : file) << ":" << line << ":" << column;
  return out.str();
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(const std::string& raw) {
  std::string line = raw.substr(0, raw.find('#'));
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class Parser {
 public:
  Parser(WorkspaceText& w, std::map<std::string, Location>& locations, std::string file)
      : w_(w), locations_(locations), file_(std::move(file)) {}

  void run(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      tokens_ = tokenize(raw);
      if (tokens_.empty()) continue;
      statement();
    }
    finish_algebra();
  }

 private:
  [[noreturn]] void fail(std::size_t token, const std::string& message) const {
    std::size_t column = token < tokens_.size() ? tokens_[token].column
                                                : (tokens_.empty() ? 1 : tokens_.back().column);
    throw Error(ErrorKind::parse, Location{file_, line_, column}.text() + ": " + message);
  }

  const std::string& tok(std::size_t i) const {
    if (i >= tokens_.size()) fail(i, "unexpected end of line");
    return tokens_[i].text;
  }

  void expect(std::size_t i, const std::string& word) const {
    if (tok(i) != word) fail(i, "expected '" + word + "'");
  }

  void arity(std::size_t n) const {
    if (tokens_.size() != n)
      fail(std::min(n, tokens_.size()), "expected " + std::to_string(n) + " fields");
  }

  std::size_t number(std::size_t i) const {
    const std::string& s = tok(i);
    std::size_t value = 0;
    for (char c : s) {
      if (c < '0' || c > '9') fail(i, "expected a number, got '" + s + "'");
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    return value;
  }

  Location here(std::size_t token = 0) const { return {file_, line_, tokens_[token].column}; }

  void record(const std::string& key) {
    if (locations_.count(key)) fail(1, "duplicate " + key);
    locations_[key] = here(1);
  }

  // Rows separated by '/', n entries each.
  std::vector<Element> rows(std::size_t from, std::size_t n) const {
    std::vector<Element> out;
    std::size_t count = 0, rows_seen = 0;
    for (std::size_t i = from; i < tokens_.size(); ++i) {
      if (tokens_[i].text == "/") {
        if (count != n) fail(i, "ragged table: row has " + std::to_string(count) + " entries");
        count = 0;
        ++rows_seen;
        continue;
      }
      out.push_back(number(i));
      ++count;
    }
    if (count != n) fail(tokens_.size() - 1, "ragged table: row has " + std::to_string(count) + " entries");
    if (rows_seen + 1 != n) fail(from, "expected " + std::to_string(n) + " rows");
    return out;
  }

  void finish_algebra() {
    if (!algebra_) return;
    const AlgebraDecl& a = w_.algebras.back();
    if (a.group ? a.p.empty() : (a.p.empty() || a.d.empty()))
      throw Error(ErrorKind::parse, algebra_at_.text() + ": " + (a.group ? "group" : "algebra") +
                                        " " + a.name + " is missing its table");
    algebra_ = false;
  }

  void close_contexts() {
    finish_algebra();
    form_ = false;
    morphism_ = false;
    diagram_ = false;
  }

  void statement() {
    const std::string& kw = tok(0);
    if (kw == "include") {
      arity(2);
      namespace fs = std::filesystem;
      fs::path p = fs::path(file_).parent_path() / tok(1);
      std::ifstream in(p);
      if (!in) fail(1, "cannot open " + p.string());
      close_contexts();
      Parser sub(w_, locations_, p.string());
      sub.run(in);
    } else if (kw == "slominski") {
      arity(2);
      close_contexts();
      w_.slominski_name = tok(1);
    } else if (kw == "form") {
      arity(2);
      close_contexts();
      record("form " + tok(1));
      w_.forms.push_back({tok(1), {}, {}});
      form_ = true;
    } else if (kw == "object") {
      if (!form_) fail(0, "'object' outside a form");
      expect(2, "subobjects");
      if (tokens_.size() < 4) fail(3, "an object needs at least one subobject");
      morphism_ = false;
      FormObjectDecl o{tok(1), {}, {}};
      for (std::size_t i = 3; i < tokens_.size(); ++i) o.keys.push_back(tok(i));
      w_.forms.back().objects.push_back(std::move(o));
    } else if (kw == "order") {
      if (!form_) fail(0, "'order' outside a form");
      arity(5);
      expect(3, "<=");
      morphism_ = false;
      for (auto& o : w_.forms.back().objects)
        if (o.name == tok(1)) {
          o.order.emplace_back(tok(2), tok(4));
          return;
        }
      fail(1, "unknown object " + tok(1));
    } else if (kw == "morphism") {
      if (!form_) fail(0, "'morphism' outside a form");
      arity(5);
      expect(3, "->");
      w_.forms.back().morphisms.push_back({tok(1), tok(2), tok(4), {}, {}});
      morphism_ = true;
    } else if (kw == "dimg" || kw == "iimg") {
      if (!morphism_) fail(0, "'" + kw + "' outside a morphism");
      arity(4);
      expect(2, "->");
      auto& m = w_.forms.back().morphisms.back();
      (kw == "dimg" ? m.dimg : m.iimg).emplace_back(tok(1), tok(3));
    } else if (kw == "algebra" || kw == "group") {
      arity(6);
      close_contexts();
      expect(2, "size");
      expect(4, kw == "algebra" ? "zero" : "id");
      record("algebra " + tok(1));
      AlgebraDecl a;
      a.name = tok(1);
      a.group = kw == "group";
      a.size = number(3);
      a.zero = number(5);
      if (a.size == 0 || a.size > 64) fail(3, "size must be between 1 and 64");
      if (a.zero >= a.size) fail(5, "element out of range");
      w_.algebras.push_back(std::move(a));
      algebra_ = true;
      algebra_at_ = here(1);
    } else if (kw == "p" || kw == "d" || kw == "table") {
      if (!algebra_) fail(0, "'" + kw + "' outside an algebra or group");
      AlgebraDecl& a = w_.algebras.back();
      if ((kw == "table") != a.group) fail(0, a.group ? "groups take 'table'" : "algebras take 'p' and 'd'");
      std::vector<Element>& target = kw == "d" ? a.d : a.p;
      if (!target.empty()) fail(0, "table given twice");
      target = rows(1, a.size);
      for (std::size_t i = 0; i < target.size(); ++i)
        if (target[i] >= a.size) fail(1, "element out of range");
    } else if (kw == "hom") {
      close_contexts();
      if (tokens_.size() < 7) fail(tokens_.size(), "expected 'hom <f> <A> -> <B> map ...'");
      expect(3, "->");
      expect(5, "map");
      record("hom " + tok(1));
      HomDecl h{tok(1), tok(2), tok(4), {}};
      for (std::size_t i = 6; i < tokens_.size(); ++i) h.map.push_back(number(i));
      w_.homs.push_back(std::move(h));
    } else if (kw == "zigzag") {
      close_contexts();
      zigzag();
    } else if (kw == "diagram") {
      close_contexts();
      arity(4);
      expect(2, "over");
      record("diagram " + tok(1));
      w_.diagrams.push_back({tok(1), tok(3), {}, {}, {}});
      diagram_ = true;
    } else if (kw == "use") {
      if (!diagram_) fail(0, "'use' outside a diagram");
      arity(4);
      expect(2, "as");
      w_.diagrams.back().uses.emplace_back(tok(1), tok(3));
    } else if (kw == "commute") {
      if (!diagram_) fail(0, "'commute' outside a diagram");
      arity(4);
      expect(2, "=");
      w_.diagrams.back().commutes.emplace_back(tok(1), tok(3));
    } else if (kw == "assert") {
      if (!diagram_) fail(0, "'assert' outside a diagram");
      const std::string& kind = tok(1);
      std::size_t want = (kind == "exact" || kind == "short-exact") ? 4
                         : (kind == "injective" || kind == "surjective" || kind == "iso" ||
                            kind == "zero")
                             ? 3
                             : 0;
      if (want == 0) fail(1, "unknown assertion '" + kind + "'");
      arity(want);
      std::vector<std::string> args;
      for (std::size_t i = 1; i < tokens_.size(); ++i) args.push_back(tok(i));
      w_.diagrams.back().asserts.push_back(std::move(args));
    } else {
      fail(0, "unknown keyword '" + kw + "'");
    }
  }

  // zigzag <name> [over <form>] : X0 f1:> X1 f2:< X2 ...
  // Also accepted: X0 > f1 X1 < f2 X2.
  void zigzag() {
    ZigzagDecl z;
    z.name = tok(1);
    std::size_t i = 2;
    if (tok(i) == "over") {
      z.over = tok(i + 1);
      i += 2;
    }
    expect(i, ":");
    record("zigzag " + z.name);
    ++i;
    z.nodes.push_back(tok(i++));
    while (i < tokens_.size()) {
      std::string t = tok(i);
      std::string name;
      Direction dir;
      if (t == ">" || t == "<") {
        dir = t == ">" ? Direction::right : Direction::left;
        name = tok(i + 1);
        i += 2;
      } else if (t.size() > 2 && t[t.size() - 2] == ':' && (t.back() == '>' || t.back() == '<')) {
        dir = t.back() == '>' ? Direction::right : Direction::left;
        name = t.substr(0, t.size() - 2);
        i += 1;
      } else {
        fail(i, "expected an edge like 'f:>' or 'f:<'");
      }
      z.edges.emplace_back(name, dir);
      if (i >= tokens_.size()) fail(i, "zigzag ends with an edge");
      z.nodes.push_back(tok(i++));
    }
    w_.zigzags.push_back(std::move(z));
  }

  WorkspaceText& w_;
  std::map<std::string, Location>& locations_;
  std::string file_;
  std::size_t line_ = 0;
  std::vector<Token> tokens_;
  bool form_ = false, morphism_ = false, algebra_ = false, diagram_ = false;
  Location algebra_at_;
};

WorkspaceText parse_into(std::istream& in, const std::string& source,
                         std::map<std::string, Location>& locations) {
  WorkspaceText w;
  Parser(w, locations, source).run(in);
  return w;
}

std::string join_rows(const std::vector<Element>& t, std::size_t n) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i && i % n == 0) out << " /";
    out << " " << t[i];
  }
  return out.str();
}

}  // namespace

WorkspaceText parse_workspace(std::istream& in, const std::string& source) {
  std::map<std::string, Location> locations;
  return parse_into(in, source, locations);
}

WorkspaceText parse_workspace_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, path + ": cannot open");
  return parse_workspace(in, path);
}

WorkspaceText parse_workspace_string(const std::string& text) {
  std::istringstream in(text);
  return parse_workspace(in);
}

std::string serialize(const WorkspaceText& w) {
  std::ostringstream out;
  if (w.slominski_name != "slominski") out << "slominski " << w.slominski_name << "\n";
  for (const auto& f : w.forms) {
    out << "form " << f.name << "\n";
    for (const auto& o : f.objects) {
      out << "object " << o.name << " subobjects";
      for (const auto& k : o.keys) out << " " << k;
      out << "\n";
      for (const auto& [a, b] : o.order) out << "order " << o.name << " " << a << " <= " << b << "\n";
    }
    for (const auto& m : f.morphisms) {
      out << "morphism " << m.name << " " << m.dom << " -> " << m.cod << "\n";
      for (const auto& [a, b] : m.dimg) out << "  dimg " << a << " -> " << b << "\n";
      for (const auto& [a, b] : m.iimg) out << "  iimg " << a << " -> " << b << "\n";
    }
    out << "\n";
  }
  for (const auto& a : w.algebras) {
    if (a.group) {
      out << "group " << a.name << " size " << a.size << " id " << a.zero << "\n";
      out << "table" << join_rows(a.p, a.size) << "\n";
    } else {
      out << "algebra " << a.name << " size " << a.size << " zero " << a.zero << "\n";
      out << "p" << join_rows(a.p, a.size) << "\n";
      out << "d" << join_rows(a.d, a.size) << "\n";
    }
  }
  for (const auto& h : w.homs) {
    out << "hom " << h.name << " " << h.dom << " -> " << h.cod << " map";
    for (auto x : h.map) out << " " << x;
    out << "\n";
  }
  if (!w.algebras.empty() || !w.homs.empty()) out << "\n";
  for (const auto& z : w.zigzags) {
    out << "zigzag " << z.name;
    if (!z.over.empty()) out << " over " << z.over;
    out << " : " << z.nodes[0];
    for (std::size_t i = 0; i < z.edges.size(); ++i)
      out << " " << z.edges[i].first << (z.edges[i].second == Direction::right ? ":>" : ":<") << " "
          << z.nodes[i + 1];
    out << "\n";
  }
  if (!w.zigzags.empty()) out << "\n";
  for (const auto& d : w.diagrams) {
    out << "diagram " << d.name << " over " << d.over << "\n";
    for (const auto& [e, r] : d.uses) out << "use " << e << " as " << r << "\n";
    for (const auto& [a, b] : d.commutes) out << "commute " << a << " = " << b << "\n";
    for (const auto& a : d.asserts) {
      out << "assert";
      for (const auto& t : a) out << " " << t;
      out << "\n";
    }
    out << "\n";
  }
  return out.str();
}

// ---- resolution ----

namespace {

std::optional<ObjectId> find_object(const Form& f, const std::string& name) {
  if (auto s = dynamic_cast<const SlominskiForm*>(&f)) return s->find_object(name);
  if (auto s = dynamic_cast<const FiniteForm*>(&f)) return s->find_object(name);
  return std::nullopt;
}

std::optional<Morphism> find_morphism(const Form& f, const std::string& name) {
  if (auto s = dynamic_cast<const SlominskiForm*>(&f)) return s->find_morphism(name);
  if (auto s = dynamic_cast<const FiniteForm*>(&f)) return s->find_morphism(name);
  return std::nullopt;
}

bool is_lattice(const Lattice& l) {
  if (l.try_bottom() == kNoSub || l.try_top() == kNoSub) return false;
  for (SubIndex a = 0; a < l.size(); ++a)
    for (SubIndex b = 0; b < l.size(); ++b) {
      if (a != b && l.leq(a, b) && l.leq(b, a)) return false;
      if (l.try_join(a, b) == kNoSub || l.try_meet(a, b) == kNoSub) return false;
    }
  return true;
}

}  // namespace

Error Workspace::error_at(const std::string& key, const std::string& message) const {
  auto it = locations_.find(key);
  std::string where = it == locations_.end() ? key : it->second.text();
  return Error(ErrorKind::validation, where + ": " + message);
}

Workspace::Workspace(WorkspaceText text, std::map<std::string, Location> locations)
    : text_(std::move(text)), locations_(std::move(locations)),
      slominski_(std::make_shared<SlominskiForm>(text_.slominski_name)) {
  for (const auto& fd : text_.forms) {
    const std::string key = "form " + fd.name;
    if (finite_.count(fd.name) || fd.name == text_.slominski_name)
      throw error_at(key, "duplicate form " + fd.name);
    auto form = std::make_shared<FiniteForm>(fd.name);
    for (const auto& o : fd.objects) {
      std::map<std::string, SubIndex> index;
      for (SubIndex i = 0; i < o.keys.size(); ++i)
        if (!index.emplace(o.keys[i], i).second)
          throw error_at(key, "object " + o.name + " repeats subobject " + o.keys[i]);
      std::vector<std::pair<SubIndex, SubIndex>> rel;
      for (const auto& [a, b] : o.order) {
        if (!index.count(a) || !index.count(b))
          throw error_at(key, "order on " + o.name + " names an unknown subobject");
        rel.emplace_back(index[a], index[b]);
      }
      Lattice l = Lattice::from_relation(o.keys, rel);
      if (!is_lattice(l))
        throw Error(ErrorKind::not_a_lattice,
                    error_at(key, "subobjects of " + o.name + " do not form a lattice").what());
      try {
        form->add_object(o.name, l);
      } catch (const Error& e) {
        throw error_at(key, e.what());
      }
    }
    for (const auto& md : fd.morphisms) {
      auto dom = form->find_object(md.dom), cod = form->find_object(md.cod);
      if (!dom || !cod) throw error_at(key, "morphism " + md.name + " has an unknown endpoint");
      if (form->find_morphism(md.name))
        throw error_at(key, "duplicate morphism " + md.name);
      Lattice ld = form->lattice(*dom), lc = form->lattice(*cod);
      Morphism m;
      m.dom = *dom;
      m.cod = *cod;
      m.label = md.name;
      m.dimg.assign(ld.size(), kNoSub);
      m.iimg.assign(lc.size(), kNoSub);
      auto fill = [&](const auto& pairs, const Lattice& from, const Lattice& to,
                      std::vector<SubIndex>& map, const char* what) {
        for (const auto& [a, b] : pairs) {
          auto x = from.find(a), y = to.find(b);
          if (!x || !y) throw error_at(key, std::string(what) + " of " + md.name + " names an unknown subobject");
          map[*x] = *y;
        }
        for (SubIndex i = 0; i < map.size(); ++i)
          if (map[i] == kNoSub)
            throw error_at(key, std::string(what) + " of " + md.name + " misses " + from.key(i));
      };
      fill(md.dimg, ld, lc, m.dimg, "dimg");
      fill(md.iimg, lc, ld, m.iimg, "iimg");
      form->add_morphism(std::move(m));
    }
    form->add_missing_identities();
    finite_[fd.name] = form;
  }

  for (const auto& a : text_.algebras) {
    const std::string key = "algebra " + a.name;
    if (slominski_->find_object(a.name)) throw error_at(key, "duplicate algebra " + a.name);
    try {
      if (a.group) {
        CayleyTable t(a.size);
        for (std::size_t i = 0; i < a.size; ++i)
          t[i].assign(a.p.begin() + i * a.size, a.p.begin() + (i + 1) * a.size);
        if (auto why = group_table_problem(t); !why.empty()) throw Error(ErrorKind::validation, why);
        SlominskiAlgebra alg = from_group(t);
        if (alg.zero() != a.zero)
          throw Error(ErrorKind::validation, "declared identity is not the identity");
        slominski_->add_algebra(a.name, std::move(alg));
      } else {
        slominski_->add_algebra(a.name, SlominskiAlgebra::make(a.size, a.zero, a.p, a.d));
      }
    } catch (const Error& e) {
      throw error_at(key, e.what());
    }
  }
  for (const auto& h : text_.homs) {
    const std::string key = "hom " + h.name;
    auto dom = slominski_->find_object(h.dom), cod = slominski_->find_object(h.cod);
    if (!dom || !cod) throw error_at(key, "hom " + h.name + " has an unknown endpoint");
    try {
      slominski_->declare(slominski_->hom(*dom, *cod, h.map, h.name));
    } catch (const Error& e) {
      throw error_at(key, e.what());
    }
  }

  for (const auto& z : text_.zigzags) zigzag(z.name);
  for (const auto& d : text_.diagrams) diagram(d.name);
}

Workspace Workspace::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, path + ": cannot open");
  std::map<std::string, Location> locations;
  WorkspaceText t = parse_into(in, path, locations);
  return Workspace(std::move(t), std::move(locations));
}

Workspace Workspace::from_string(const std::string& text) {
  std::istringstream in(text);
  std::map<std::string, Location> locations;
  WorkspaceText t = parse_into(in, "<input>", locations);
  return Workspace(std::move(t), std::move(locations));
}

std::vector<std::string> Workspace::form_names() const {
  std::vector<std::string> out;
  for (const auto& f : text_.forms) out.push_back(f.name);
  if (!text_.algebras.empty()) out.push_back(text_.slominski_name);
  return out;
}

FormPtr Workspace::form(const std::string& name) const {
  if (name == text_.slominski_name) return slominski_;
  auto it = finite_.find(name);
  if (it == finite_.end()) throw Error(ErrorKind::validation, "unknown form " + name);
  return it->second;
}

FormPtr Workspace::owner_of(const ZigzagDecl& z) const {
  const std::string key = "zigzag " + z.name;
  if (!z.over.empty()) {
    try {
      return form(z.over);
    } catch (const Error&) {
      throw error_at(key, "unknown form " + z.over);
    }
  }
  std::vector<FormPtr> fits;
  for (const auto& name : form_names()) {
    FormPtr f = form(name);
    bool ok = true;
    for (const auto& n : z.nodes) ok = ok && find_object(*f, n).has_value();
    for (const auto& e : z.edges) ok = ok && find_morphism(*f, e.first).has_value();
    if (ok) fits.push_back(f);
  }
  if (fits.empty()) throw error_at(key, "no form declares every name in zigzag " + z.name);
  if (fits.size() > 1) throw error_at(key, "zigzag " + z.name + " is ambiguous; add 'over <form>'");
  return fits[0];
}

std::pair<FormPtr, Zigzag> Workspace::zigzag(const std::string& name) const {
  for (const auto& z : text_.zigzags) {
    if (z.name != name) continue;
    const std::string key = "zigzag " + z.name;
    FormPtr f = owner_of(z);
    std::vector<ObjectId> nodes;
    for (const auto& n : z.nodes) {
      auto x = find_object(*f, n);
      if (!x) throw error_at(key, "unknown object " + n);
      nodes.push_back(*x);
    }
    std::vector<Edge> edges;
    for (const auto& [m, dir] : z.edges) {
      auto mor = find_morphism(*f, m);
      if (!mor) throw error_at(key, "unknown morphism " + m);
      edges.push_back({*mor, dir});
    }
    try {
      return {f, Zigzag(std::move(nodes), std::move(edges))};
    } catch (const Error& e) {
      throw error_at(key, e.what());
    }
  }
  throw Error(ErrorKind::validation, "unknown zigzag " + name);
}

Diagram Workspace::diagram(const std::string& name) const {
  for (const auto& dd : text_.diagrams) {
    if (dd.name != name) continue;
    const std::string key = "diagram " + dd.name;
    Diagram d;
    d.name = dd.name;
    try {
      d.form = form(dd.over);
    } catch (const Error&) {
      throw error_at(key, "unknown form " + dd.over);
    }
    std::map<std::string, std::string> role_of;  // morphism name -> first role
    for (const auto& [entity, role] : dd.uses) {
      if (d.objects.count(role) || d.arrows.count(role))
        throw error_at(key, "role " + role + " bound twice");
      if (auto x = find_object(*d.form, entity)) {
        d.objects[role] = *x;
      } else if (auto m = find_morphism(*d.form, entity)) {
        d.arrows[role] = *m;
        role_of.emplace(entity, role);
      } else {
        throw error_at(key, "unknown object or morphism " + entity);
      }
    }
    auto resolve = [&](const std::string& text) {
      Path p;
      try {
        p = parse_path(text);
      } catch (const Error& e) {
        throw error_at(key, e.what());
      }
      for (auto& step : p) {
        if (d.arrows.count(step)) continue;
        auto it = role_of.find(step);
        if (it == role_of.end()) throw error_at(key, "path step " + step + " is not a bound arrow");
        step = it->second;
      }
      return path_text(p);
    };
    for (const auto& [a, b] : dd.commutes) d.hypotheses.push_back(commute(resolve(a), resolve(b)));
    for (const auto& a : dd.asserts) {
      const std::string& k = a[0];
      if (k == "exact") d.hypotheses.push_back(exact(resolve(a[1]), resolve(a[2])));
      else if (k == "short-exact") d.hypotheses.push_back(short_exact(resolve(a[1]), resolve(a[2])));
      else if (k == "injective") d.hypotheses.push_back(injective(resolve(a[1])));
      else if (k == "surjective") d.hypotheses.push_back(surjective(resolve(a[1])));
      else if (k == "iso") d.hypotheses.push_back(iso(resolve(a[1])));
      else if (k == "zero") d.hypotheses.push_back(zero(resolve(a[1])));
    }
    for (const auto& h : d.hypotheses) {
      for (const Path* p : {&h.lhs, &h.rhs})
        if (!p->empty()) {
          try {
            d.path(*p);
          } catch (const Error& e) {
            throw error_at(key, h.text() + ": " + e.what());
          }
        }
    }
    return d;
  }
  throw Error(ErrorKind::validation, "unknown diagram " + name);
}

}  // namespace noether

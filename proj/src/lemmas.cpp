#include "noether/lemmas.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "noether/slominski.hpp"
#include "noether/zigzag.hpp"

namespace noether {

namespace {

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

// "f:A>B g:B>C"
std::vector<ArrowRole> arrow_roles(const std::string& s) {
  std::vector<ArrowRole> out;
  for (const auto& w : words(s)) {
    auto colon = w.find(':'), gt = w.find('>');
    out.push_back({w.substr(0, colon), w.substr(colon + 1, gt - colon - 1), w.substr(gt + 1)});
  }
  return out;
}

using As = std::vector<Assertion>;

As operator+(As a, const As& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

LemmaTemplate make(std::string name, const std::string& objects, const std::string& arrows, As hyps,
                   As concl) {
  return {std::move(name), words(objects), arrow_roles(arrows), std::move(hyps), std::move(concl)};
}

std::vector<LemmaTemplate> build_templates() {
  std::vector<LemmaTemplate> t;

  const std::string four_o = "A B C D A' B' C' D'";
  const std::string four_a =
      "f:A>B g:B>C h:C>D x:A'>B' y:B'>C' z:C'>D' s:A>A' t:B>B' u:C>C' v:D>D'";
  const As four_h = {commute("t.f", "x.s"), commute("u.g", "y.t"), commute("v.h", "z.u"),
                     exact("f", "g"),       exact("g", "h"),       exact("x", "y"),
                     exact("y", "z"),       surjective("s"),       injective("v")};
  const As four_i = {sub_eq(dimg("g", ker("t")), ker("u"))};
  const As four_ii = {sub_eq(iimg("y", im("u")), im("t"))};
  t.push_back(make("four-i", four_o, four_a, four_h, four_i));
  t.push_back(make("four-ii", four_o, four_a, four_h, four_ii));
  t.push_back(make("four", four_o, four_a, four_h, four_i + four_ii));

  const std::string five_o = "A B C D E A' B' C' D' E'";
  const std::string five_a =
      "f:A>B g:B>C h:C>D m:D>E x:A'>B' y:B'>C' z:C'>D' n:D'>E' "
      "s:A>A' t:B>B' u:C>C' v:D>D' w:E>E'";
  const As five_h = {commute("t.f", "x.s"), commute("u.g", "y.t"), commute("v.h", "z.u"),
                     commute("w.m", "n.v"), exact("f", "g"),       exact("g", "h"),
                     exact("h", "m"),       exact("x", "y"),       exact("y", "z"),
                     exact("z", "n")};
  t.push_back(make("five-i", five_o, five_a,
                   five_h + As{surjective("s"), injective("t"), injective("v")},
                   {injective("u")}));
  t.push_back(make("five-ii", five_o, five_a,
                   five_h + As{injective("w"), surjective("t"), surjective("v")},
                   {surjective("u")}));
  t.push_back(make("five", five_o, five_a,
                   five_h + As{iso("t"), iso("v"), surjective("s"), injective("w")}, {iso("u")}));

  const std::string ttt_o = "A B C A' B' C' A'' B'' C''";
  const std::string ttt_a =
      "f:A>B g:B>C x:A'>B' y:B'>C' m:A''>B'' n:B''>C'' "
      "s:A>A' t:B>B' u:C>C' i:A'>A'' j:B'>B'' k:C'>C''";
  const As ttt_h = {commute("t.f", "x.s"), commute("u.g", "y.t"), commute("j.x", "m.i"),
                    commute("k.y", "n.j"), short_exact("s", "i"), short_exact("t", "j"),
                    short_exact("u", "k")};
  t.push_back(make("3x3-upper", ttt_o, ttt_a,
                   ttt_h + As{short_exact("x", "y"), short_exact("m", "n")},
                   {short_exact("f", "g")}));
  t.push_back(make("3x3-lower", ttt_o, ttt_a,
                   ttt_h + As{short_exact("f", "g"), short_exact("x", "y")},
                   {short_exact("m", "n")}));
  t.push_back(make("3x3-middle", ttt_o, ttt_a,
                   ttt_h + As{short_exact("f", "g"), short_exact("m", "n"), zero("y.x")},
                   {short_exact("x", "y")}));

  const std::string sf_o = "A B C A' B' C'";
  const std::string sf_a = "f:A>B g:B>C x:A'>B' y:B'>C' s:A>A' t:B>B' u:C>C'";
  const As sf_h = {short_exact("f", "g"), short_exact("x", "y"), commute("t.f", "x.s"),
                   commute("u.g", "y.t")};
  t.push_back(make("short-five-i", sf_o, sf_a, sf_h + As{injective("s"), injective("u")},
                   {injective("t")}));
  t.push_back(make("short-five-ii", sf_o, sf_a, sf_h + As{surjective("s"), surjective("u")},
                   {surjective("t")}));
  t.push_back(make("short-five", sf_o, sf_a, sf_h + As{iso("s"), iso("u")}, {iso("t")}));

  t.push_back(make("spider", "V W X Y Z", "f:V>W g:V>X h:X>W j:Y>X i:X>Z k:Y>Z",
                   {short_exact("g", "i"), short_exact("j", "h"), commute("f", "h.g"),
                    commute("k", "i.j"), iso("k")},
                   {iso("f")}));

  t.push_back(make("incomplete-snail", "W1 W2 X Y1 Y2 Z",
                   "x:W1>W2 g:W1>X y:W2>Z b:X>W2 d:X>Y2 a:Y1>X e:Y1>Y2 f:Y2>Z",
                   {commute("x", "b.g"), commute("y.b", "f.d"), commute("e", "d.a"),
                    exact("g", "d"), exact("a", "b"), exact("e", "f"), surjective("b")},
                   {exact("x", "y")}));

  const std::string sq_o = "A B C A' B' C'";
  const std::string sq_a = "f:A>B g:B>C m:A'>B' n:B'>C' x:A>A' y:B>B' z:C>C'";
  const As sq_h = {commute("y.f", "m.x"), commute("z.g", "n.y"), surjective("x"), injective("z")};
  t.push_back(make("square-exact-i", sq_o, sq_a, sq_h + As{surjective("y"), exact("f", "g")},
                   {exact("m", "n")}));
  t.push_back(make("square-exact-ii", sq_o, sq_a, sq_h + As{injective("y"), exact("m", "n")},
                   {exact("f", "g")}));

  const std::string di_o = "A H B G C F D E";
  const std::string di_a =
      "f:A>H g:A>B a:H>B c:H>F x:H>G d:B>D u:B>C y:G>F v:C>D b:F>D m:F>E n:D>E";
  const As di_h = {exact("f", "x"),      exact("g", "u"),      exact("y", "m"),
                   exact("v", "n"),      surjective("x"),      injective("v"),
                   commute("d.a", "b.c"), commute("g", "a.f"), commute("c", "y.x"),
                   commute("d", "v.u"),  commute("m", "n.b")};
  t.push_back(make("diamond-i", di_o, di_a, di_h + As{injective("a")}, {injective("y")}));
  t.push_back(make("diamond-ii", di_o, di_a, di_h + As{surjective("b")}, {surjective("u")}));

  const std::string td_o = "A D B C G J H I";
  const std::string td_a =
      "a:A>D b:A>B c:G>J d:G>H p:D>B u:D>C q:B>J v:B>C r:J>H x:J>I y:H>I";
  const As td_h = {exact("p", "q"),      exact("q", "r"),      commute("b", "p.a"),
                   commute("u", "v.p"), commute("d", "r.c"), commute("x", "y.r")};
  t.push_back(make("two-diamond-i", td_o, td_a,
                   td_h + As{surjective("u"), injective("v"), injective("y")}, {injective("x")}));
  t.push_back(make("two-diamond-ii", td_o, td_a,
                   td_h + As{surjective("a"), surjective("c"), injective("d")},
                   {surjective("b")}));

  const std::string bd_o = "A B C S T U V A' B' C'";
  const std::string bd_a =
      "f:A>S g:A>T m:B>T n:B>U z:C>U alpha:C>V beta:S>A' h:T>A' o:T>B' p:U>B' y:U>C' x:V>C'";
  const As bd_h = {exact("g", "o"),   exact("n", "y"),   exact("m", "h"),   exact("z", "p"),
                   surjective("f"),   injective("g"),    injective("n"),    surjective("o"),
                   surjective("y"),   injective("x"),    commute("beta.f", "h.g"),
                   commute("o.m", "p.n"), commute("y.z", "x.alpha")};
  t.push_back(make("baby-dragon-i", bd_o, bd_a, bd_h + As{injective("alpha")},
                   {injective("beta")}));
  t.push_back(make("baby-dragon-ii", bd_o, bd_a, bd_h + As{surjective("beta")},
                   {surjective("alpha")}));

  const std::string dr_o =
      "N Q P Z E H G D A C R S U V W Z' A' C' D' Q' P' N' H' G' E'";
  const std::string dr_a =
      "a:N>Q b:N>P c:Q>Z d:P>Z e:E>H f:E>G g:H>D h:G>D "
      "x1:Z>R x2:Z>S x3:A>S x4:A>U x5:C>U x6:C>V x7:D>V x8:D>W "
      "y1:R>Z' y2:S>Z' y3:S>A' y4:U>A' y5:U>C' y6:V>C' y7:V>D' y8:W>D' "
      "i:Z'>Q' j:Z'>P' k:Q'>N' l:P'>N' m:D'>H' o:D'>G' p:H'>E' q:G'>E'";
  const As dr_h = {surjective("x1"), surjective("y3"), surjective("y5"), injective("x4"),
                   injective("x6"),  injective("y8"),  exact("c", "x2"),   exact("x2", "y3"),
                   exact("d", "x1"), exact("y1", "j"), exact("x3", "y2"),  exact("y2", "i"),
                   exact("x4", "y5"), exact("x5", "y4"), exact("x6", "y7"), exact("y7", "o"),
                   exact("h", "x7"), exact("x7", "y6"), exact("g", "x8"),  exact("y8", "m"),
                   commute("c.a", "d.b"),   commute("y1.x1", "y2.x2"), commute("y3.x3", "y4.x4"),
                   commute("y5.x5", "y6.x6"), commute("y7.x7", "y8.x8"), commute("k.i", "l.j"),
                   commute("g.e", "h.f"),   commute("p.m", "q.o")};
  t.push_back(make("dragon-i", dr_o, dr_a, dr_h + As{surjective("a"), surjective("e")},
                   {injective("y1")}));
  t.push_back(make("dragon-ii", dr_o, dr_a, dr_h + As{injective("l"), injective("q")},
                   {surjective("x8")}));

  t.push_back(make("snake", "A B C A' B' C'",
                   "f:A>B g:B>C f':A'>B' g':B'>C' alpha:A>A' beta:B>B' gamma:C>C'",
                   {commute("beta.f", "f'.alpha"), commute("gamma.g", "g'.beta"), exact("f", "g"),
                    exact("f'", "g'"), surjective("g"), injective("f'"),
                    conormal(ker("alpha")), conormal(ker("beta")), conormal(ker("gamma")),
                    normal(im("alpha")), normal(im("beta")), normal(im("gamma"))},
                   {}));

  t.push_back(make("generalized-snail", "A B C A0 B0",
                   "f:A>B gamma:A>C f0':C>B beta':C>A0 alpha:A>A0 beta:B>B0 f0:A0>B0",
                   {commute("f", "f0'.gamma"), commute("alpha", "beta'.gamma"),
                    commute("beta.f0'", "f0.beta'"), conormal(ker("gamma")),
                    conormal(ker("alpha")), conormal(ker("beta'")), normal(im("gamma")),
                    normal(im("alpha")), normal(im("beta'"))},
                   {}));

  t.push_back(make("goursat", "A B C D E F",
                   "lambda:A>B mu:B>C alpha:A>D beta:B>E gamma:C>F lambda':D>E mu':E>F",
                   {commute("beta.lambda", "lambda'.alpha"), commute("gamma.mu", "mu'.beta"),
                    exact("lambda", "mu"), exact("lambda'", "mu'"), conormal(ker("gamma.mu"))},
                   {normal_in(im("beta.lambda"), meet(im("beta"), im("lambda'"))),
                    normal_in(join(ker("beta"), ker("mu")), ker("gamma.mu")),
                    sub_eq(dimg("beta", ker("gamma.mu")), meet(im("beta"), im("lambda'"))),
                    sub_eq(dimg("beta", join(ker("beta"), ker("mu"))), im("beta.lambda"))}));

  t.push_back(make("salamander", "Cn Cw C Ce Aw A B Be Dw D De Ds",
                   "m:Cn>C a:Cw>C k:C>Ce j:Cw>Aw c:C>A v:Ce>B d:Aw>A e:A>B s:B>Be f:A>Dw "
                   "g:B>D n:Be>De l:Dw>D t:D>De u:D>Ds",
                   {zero("k.a"), zero("e.d"), zero("s.e"), zero("t.l"), zero("c.m"), zero("f.c"),
                    zero("g.v"), zero("u.g"), commute("c.a", "d.j"), commute("v.k", "e.c"),
                    commute("g.e", "l.f"), commute("n.s", "t.g"), normal(im("c"))},
                   {}));

  t.push_back(make("strongly-short-exact", "Z0 A B C Z1", "o:Z0>A f:A>B g:B>C t:C>Z1",
                   {exact("o", "f"), exact("f", "g"), exact("g", "t")},
                   {short_exact("f", "g")}));
  return t;
}

}  // namespace

const std::vector<LemmaTemplate>& lemma_templates() {
  static const std::vector<LemmaTemplate> all = build_templates();
  return all;
}

const LemmaTemplate& lemma_template(const std::string& name) {
  for (const auto& t : lemma_templates())
    if (t.name == name) return t;
  throw Error(ErrorKind::validation, "unknown lemma " + name);
}

std::vector<std::string> lemma_names() {
  std::vector<std::string> out;
  for (const auto& t : lemma_templates()) out.push_back(t.name);
  return out;
}

void validate_shape(const Diagram& d, const LemmaTemplate& t) {
  for (const auto& o : t.objects)
    if (!d.objects.count(o))
      throw Error(ErrorKind::shape_mismatch, t.name + ": missing object " + o);
  for (const auto& a : t.arrows) {
    auto it = d.arrows.find(a.name);
    if (it == d.arrows.end())
      throw Error(ErrorKind::shape_mismatch, t.name + ": missing arrow " + a.name);
    if (it->second.dom != d.objects.at(a.dom) || it->second.cod != d.objects.at(a.cod))
      throw Error(ErrorKind::shape_mismatch,
                  t.name + ": arrow " + a.name + " must go " + a.dom + " -> " + a.cod);
  }
}

namespace {

// Template hypotheses first, then the diagram's own declarations that are not already there.
Diagram with_template(const Diagram& d, const LemmaTemplate& t) {
  validate_shape(d, t);
  Diagram r = d;
  r.hypotheses = t.hypotheses;
  std::set<std::string> seen;
  for (const auto& h : t.hypotheses) seen.insert(h.text());
  for (const auto& h : d.hypotheses)
    if (seen.insert(h.text()).second) r.hypotheses.push_back(h);
  return r;
}

CheckLine line(bool ok, std::string name, std::string witness = {}) {
  return CheckLine{ok ? CheckLine::Status::pass : CheckLine::Status::fail, std::move(name),
                   ok ? std::string{} : std::move(witness), {}};
}

void finish_witness(LemmaReport& r) {
  if (!r.witness.empty()) return;
  for (const auto& l : r.hypotheses)
    if (l.status == CheckLine::Status::fail) {
      r.witness = "hypothesis failed: " + l.name;
      return;
    }
  for (const auto& l : r.conclusions)
    if (l.status == CheckLine::Status::fail) {
      r.witness = "counterexample: " + l.name + (l.witness.empty() ? "" : " " + l.witness);
      return;
    }
}

// Shared scaffolding for lemmas that construct a sequence by homomorphism induction.
class Builder {
 public:
  Builder(const Diagram& d, const std::string& lemma)
      : d_(with_template(d, lemma_template(lemma))), form_(*d.form) {
    c_.report = verify_generic(d_, {}, lemma);
  }

  bool ok() const { return c_.report.hypotheses_hold(); }
  const Diagram& diagram() const { return d_; }
  const Form& form() const { return form_; }

  void add_object(std::string name, std::optional<ObjectId> x) {
    c_.object_names.push_back(std::move(name));
    c_.objects.push_back(x);
  }

  void add_hypothesis(CheckLine l) { c_.report.hypotheses.push_back(std::move(l)); }
  void add_conclusion(CheckLine l) { c_.report.conclusions.push_back(std::move(l)); }

  void connect(const std::string& name, const Zigzag& z) {
    c_.map_names.push_back(name);
    InductionVerdict v = decide_induction(form_, z);
    if (!v.induces) {
      add_conclusion(line(false, "induces " + name, v.failed_condition + ": " + v.witness));
      c_.maps.emplace_back();
      return;
    }
    add_conclusion(line(true, "induces " + name));
    if (auto slo = dynamic_cast<const SlominskiForm*>(&form_)) {
      bool tables = true;
      for (const auto& e : z.edges()) tables = tables && e.morphism.has_table();
      if (tables) add_conclusion(elementwise(*slo, z, *v.morphism, name));
    }
    c_.maps.push_back(v.morphism);
  }

  void exact_at(std::size_t i) {
    const std::string name = "exact at " + c_.object_names[i];
    const auto& f = c_.maps[i - 1];
    const auto& g = c_.maps[i];
    if (!f || !g) {
      add_conclusion(line(false, name, "connecting map missing"));
      return;
    }
    Subobject a = image(form_, *f), b = kernel(form_, *g);
    CheckLine l = line(a == b, name,
                       "Im = " + form_.sub_name(a) + " but Ker = " + form_.sub_name(b));
    l.values = {a, b};
    add_conclusion(std::move(l));
  }

  void skip_all(const std::vector<std::string>& names) {
    for (const auto& n : names)
      add_conclusion(CheckLine{CheckLine::Status::skip, n, {}, {}});
  }

  Construction finish() {
    finish_witness(c_.report);
    return std::move(c_);
  }

 private:
  static CheckLine elementwise(const SlominskiForm& slo, const Zigzag& z, const Morphism& m,
                               const std::string& name) {
    auto f = induced_relation(slo, z).as_function();
    if (!f) return line(false, "elementwise " + name, "induced relation is not a function");
    Morphism e;
    e.dom = m.dom;
    e.cod = m.cod;
    e.table = *f;
    slo.fill_maps(e);
    return line(e.dimg == m.dimg && e.iimg == m.iimg, "elementwise " + name,
                "element map disagrees with chased image maps");
  }

  Diagram d_;
  const Form& form_;
  Construction c_;
};

Morphism emb(const Form& form, Subobject s) { return embedding_of(form, s); }
Morphism proj(const Form& form, Subobject s) { return projection_of(form, s); }

Edge right(const Morphism& m) { return {m, Direction::right}; }
Edge left(const Morphism& m) { return {m, Direction::left}; }

}  // namespace

Construction snake(const Diagram& input) {
  Builder b(input, "snake");
  const std::vector<std::string> objs = {"Ker alpha",  "Ker beta",  "Ker gamma",
                                         "Coker alpha", "Coker beta", "Coker gamma"};
  if (!b.ok()) {
    b.skip_all({"exact at Ker beta", "exact at Ker gamma", "exact at Coker alpha",
                "exact at Coker beta"});
    return b.finish();
  }
  const Diagram& d = b.diagram();
  const Form& form = b.form();
  const Morphism &f = d.arrow("f"), &g = d.arrow("g"), &fp = d.arrow("f'"), &gp = d.arrow("g'");
  const Morphism &alpha = d.arrow("alpha"), &beta = d.arrow("beta"), &gamma = d.arrow("gamma");

  Morphism ka = emb(form, kernel(form, alpha)), kb = emb(form, kernel(form, beta)),
           kc = emb(form, kernel(form, gamma));
  Morphism ca = proj(form, image(form, alpha)), cb = proj(form, image(form, beta)),
           cc = proj(form, image(form, gamma));
  b.add_object(objs[0], ka.dom);
  b.add_object(objs[1], kb.dom);
  b.add_object(objs[2], kc.dom);
  b.add_object(objs[3], ca.cod);
  b.add_object(objs[4], cb.cod);
  b.add_object(objs[5], cc.cod);

  b.connect("fbar", Zigzag::from_edges(ka.dom, {right(ka), right(f), left(kb)}));
  b.connect("gbar", Zigzag::from_edges(kb.dom, {right(kb), right(g), left(kc)}));
  b.connect("delta",
            Zigzag::from_edges(kc.dom, {right(kc), left(g), right(beta), left(fp), right(ca)}));
  b.connect("fbar'", Zigzag::from_edges(ca.cod, {left(ca), right(fp), right(cb)}));
  b.connect("gbar'", Zigzag::from_edges(cb.cod, {left(cb), right(gp), right(cc)}));
  for (std::size_t i = 1; i <= 4; ++i) b.exact_at(i);
  return b.finish();
}

Construction generalized_snail(const Diagram& input) {
  Builder b(input, "generalized-snail");
  if (!b.ok()) {
    b.skip_all({"exact at Ker alpha", "exact at Ker beta'", "exact at Coker gamma",
                "exact at Coker alpha"});
    return b.finish();
  }
  const Diagram& d = b.diagram();
  const Form& form = b.form();
  const Morphism &gamma = d.arrow("gamma"), &alpha = d.arrow("alpha"), &betap = d.arrow("beta'");

  Morphism kg = emb(form, kernel(form, gamma)), ka = emb(form, kernel(form, alpha)),
           kb = emb(form, kernel(form, betap));
  Morphism cg = proj(form, image(form, gamma)), ca = proj(form, image(form, alpha)),
           cb = proj(form, image(form, betap));
  b.add_object("Ker gamma", kg.dom);
  b.add_object("Ker alpha", ka.dom);
  b.add_object("Ker beta'", kb.dom);
  b.add_object("Coker gamma", cg.cod);
  b.add_object("Coker alpha", ca.cod);
  b.add_object("Coker beta'", cb.cod);

  b.connect("v", Zigzag::from_edges(kg.dom, {right(kg), left(ka)}));
  b.connect("w", Zigzag::from_edges(ka.dom, {right(ka), right(gamma), left(kb)}));
  b.connect("x", Zigzag::from_edges(kb.dom, {right(kb), right(cg)}));
  b.connect("y", Zigzag::from_edges(cg.cod, {left(cg), right(betap), right(ca)}));
  b.connect("z", Zigzag::from_edges(ca.cod, {left(ca), right(cb)}));
  for (std::size_t i = 1; i <= 4; ++i) b.exact_at(i);
  return b.finish();
}

Construction goursat(const Diagram& input) {
  const LemmaTemplate& t = lemma_template("goursat");
  Diagram d = with_template(input, t);
  Construction c;
  c.report = verify_generic(d, t.conclusions, "goursat");
  const std::string iso_name =
      "iso Ker(gamma.mu)/(Ker beta join Ker mu) ~ (Im beta meet Im lambda')/Im(beta.lambda)";
  if (!c.report.hypotheses_hold()) {
    c.report.conclusions.push_back(CheckLine{CheckLine::Status::skip, iso_name, {}, {}});
    return c;
  }
  const Form& form = *d.form;
  const Morphism& beta = d.arrow("beta");
  Subobject w = d.eval(*join(ker("beta"), ker("mu")));
  Subobject x = d.eval(*ker("gamma.mu"));
  c.object_names = {"Ker(gamma.mu)/(Ker beta join Ker mu)",
                    "(Im beta meet Im lambda')/Im(beta.lambda)"};
  c.map_names = {"iso"};
  try {
    QuotientIsoResult q = quotient_iso(form, beta, w, x);
    if (q.holds() && q.verdict && q.verdict->forward) {
      c.objects = {q.zigzag->front(), q.zigzag->back()};
      c.maps = {q.verdict->forward};
      c.report.conclusions.push_back(line(true, iso_name));
    } else {
      c.objects = {std::nullopt, std::nullopt};
      c.maps = {std::nullopt};
      std::string why = !q.w_normal_in_x ? "W not normal in X" : "zigzag does not induce an iso";
      c.report.conclusions.push_back(line(false, iso_name, why));
    }
  } catch (const Error& e) {
    c.objects = {std::nullopt, std::nullopt};
    c.maps = {std::nullopt};
    c.report.conclusions.push_back(line(false, iso_name, e.what()));
  }
  finish_witness(c.report);
  return c;
}

HomologyObject homology_object(const Form& form, Subobject upper, Subobject lower) {
  HomologyObject h;
  h.upper = upper;
  h.lower = lower;
  h.guard = form.sub_name(lower) + " normal in " + form.sub_name(upper);
  if (upper.owner != lower.owner || !is_relatively_normal(form, lower, upper)) return h;
  Morphism i = embedding_of(form, upper);
  Morphism p = projection_of(form, inverse_image(i, lower));
  h.defined = true;
  h.embedding = i;
  h.projection = p;
  h.object = p.cod;
  return h;
}

HomologyObject homology_object(const Form& form, ObjectId x, const std::vector<Morphism>& incoming,
                               const std::vector<Morphism>& outgoing) {
  Subobject upper = top(form, x), lower = bottom(form, x);
  for (const auto& g : outgoing) {
    if (g.dom != x) throw Error(ErrorKind::validation, "outgoing arrow does not start at object");
    upper = meet(form, upper, kernel(form, g));
  }
  for (const auto& f : incoming) {
    if (f.cod != x) throw Error(ErrorKind::validation, "incoming arrow does not end at object");
    lower = join(form, lower, image(form, f));
  }
  return homology_object(form, upper, lower);
}

Construction salamander(const Diagram& input) {
  Builder b(input, "salamander");
  const std::vector<std::string> exact_names = {"exact at A_h", "exact at A-box",
                                                "exact at box-B", "exact at B_h"};
  if (!b.ok()) {
    b.skip_all(exact_names);
    return b.finish();
  }
  const Diagram& d = b.diagram();
  const Form& form = b.form();
  auto p = [&](const std::string& s) { return d.path(parse_path(s)); };

  struct Spec {
    std::string name, at;
    std::vector<std::string> in, out;
  };
  const std::vector<Spec> specs = {{"C-box", "C", {"m", "a"}, {"e.c"}},
                                   {"A_h", "A", {"d"}, {"e"}},
                                   {"A-box", "A", {"c", "d"}, {"g.e"}},
                                   {"box-B", "B", {"e.c"}, {"s", "g"}},
                                   {"B_h", "B", {"e"}, {"s"}},
                                   {"box-D", "D", {"g.e"}, {"t", "u"}}};
  std::vector<HomologyObject> hs;
  bool defined = true;
  for (const auto& s : specs) {
    std::vector<Morphism> in, out;
    for (const auto& x : s.in) in.push_back(p(x));
    for (const auto& x : s.out) out.push_back(p(x));
    hs.push_back(homology_object(form, d.object(s.at), in, out));
    b.add_hypothesis(line(hs.back().defined, "defined " + s.name, "guard fails: " + hs.back().guard));
    defined = defined && hs.back().defined;
    b.add_object(s.name, hs.back().object);
  }
  if (!defined) {
    b.skip_all(exact_names);
    return b.finish();
  }
  // H1 <- U1 -> X1 [-> X2] <- U2 -> H2
  auto link = [&](std::size_t i, const std::optional<std::string>& arrow) {
    const HomologyObject &h1 = hs[i], &h2 = hs[i + 1];
    std::vector<Edge> edges = {left(*h1.projection), right(*h1.embedding)};
    if (arrow) edges.push_back(right(d.arrow(*arrow)));
    edges.push_back(left(*h2.embedding));
    edges.push_back(right(*h2.projection));
    b.connect(specs[i].name + "->" + specs[i + 1].name, Zigzag::from_edges(*h1.object, edges));
  };
  link(0, "c");
  link(1, std::nullopt);
  link(2, "e");
  link(3, std::nullopt);
  link(4, "g");
  for (std::size_t i = 1; i <= 4; ++i) b.exact_at(i);
  return b.finish();
}

const std::map<std::string, std::string>& four_dual_roles() {
  static const std::map<std::string, std::string> m = {
      {"A", "D'"}, {"B", "C'"}, {"C", "B'"}, {"D", "A'"}, {"A'", "D"}, {"B'", "C"},
      {"C'", "B"}, {"D'", "A"}, {"f", "z"},  {"g", "y"},  {"h", "x"},  {"x", "h"},
      {"y", "g"},  {"z", "f"},  {"s", "v"},  {"t", "u"},  {"u", "t"},  {"v", "s"}};
  return m;
}

LemmaReport strongly_short_exact_report(const Diagram& input) {
  const LemmaTemplate& t = lemma_template("strongly-short-exact");
  Diagram d = with_template(input, t);
  for (const char* end : {"Z0", "Z1"})
    if (d.form->lattice(d.object(end)).size() != 1)
      throw Error(ErrorKind::validation, std::string("end object ") + end + " is not trivial");
  return verify_generic(d, t.conclusions, t.name);
}

bool strongly_short_exact_check(const Diagram& d) { return strongly_short_exact_report(d).passed(); }

LemmaReport verify_lemma(const Diagram& d, const std::string& name) {
  if (name == "snake") return snake(d).report;
  if (name == "generalized-snail") return generalized_snail(d).report;
  if (name == "goursat") return goursat(d).report;
  if (name == "salamander") return salamander(d).report;
  if (name == "strongly-short-exact") return strongly_short_exact_report(d);
  const LemmaTemplate& t = lemma_template(name);
  return verify_generic(with_template(d, t), t.conclusions, t.name);
}

}  // namespace noether

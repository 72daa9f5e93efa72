// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "generator.hpp"
#include "groups.hpp"
#include "noether/axioms.hpp"
#include "noether/pyramid.hpp"
#include "noether/workspace.hpp"
#include "random_zigzag.hpp"

using namespace noether;
using noether::testing::Groups;
using noether::testing::InstanceGenerator;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << what << "; ";
    ok = ok && cond;
  }
};

const std::vector<std::string> order8 = {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3",
                                         "Z7", "Z8", "Z4xZ2", "Z2xZ2xZ2", "D8", "Q8"};

std::vector<ObjectId> add_all(Groups& g, const std::vector<std::string>& names) {
  std::vector<ObjectId> out;
  for (const auto& n : names) out.push_back(g.add(n));
  return out;
}

std::vector<std::size_t> function_of(const oracle::Rel& r) {
  std::vector<std::size_t> fn;
  for (auto m : r) fn.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return fn;
}

bool bijective(const oracle::Rel& r, std::size_t cod) {
  if (!oracle::is_function(r)) return false;
  auto fn = function_of(r);
  return fn.size() == cod && oracle::image(fn, oracle::full(fn.size())) == oracle::full(cod);
}

void axioms(Outcome& o) {
  std::size_t forms = 0;
  for (const auto& name : order8) {
    Groups g;
    ObjectId x = g.add(name);
    for (auto& t : enumerate_homs(g.form->algebra(x), g.form->algebra(x))) g.hom(x, x, t);
    g.form->close_under_composition();
    auto r = axiom_suite(*g.form, true);
    o.require(r.passed(), name + ": " + r.to_text());
    auto d = axiom_suite(*dualize(FormPtr(g.form)), true);
    o.require(d.passed(), "dual " + name + ": " + d.to_text());
    forms += 2;
  }
  Groups mixed;
  auto objs = add_all(mixed, {"Z1", "Z2", "Z4", "Z2xZ2", "S3"});
  for (ObjectId a : objs)
    for (ObjectId b : objs)
      for (auto& t : enumerate_homs(mixed.form->algebra(a), mixed.form->algebra(b))) mixed.hom(a, b, t);
  mixed.form->close_under_composition();
  o.require(axiom_suite(*mixed.form, true).passed(), "mixed form");
  o.require(axiom_suite(*dualize(FormPtr(mixed.form)), true).passed(), "dual of mixed form");
  o.detail << forms + 2 << " forms";
}

void d8_snake(Outcome& o) {
  Workspace ws = Workspace::load(std::string(NOETHER_FIXTURES) + "/snake_d8.txt");
  Diagram d = ws.diagram("snake");
  Construction c = snake(d);
  std::vector<std::size_t> orders;
  for (const auto& x : c.objects) orders.push_back(x ? ws.slominski()->order(*x) : 0);
  o.require((orders == std::vector<std::size_t>{1, 1, 2, 2, 2, 2}), "orders");
  int exact = 0;
  for (const auto& l : c.report.conclusions)
    exact += l.name.rfind("exact at", 0) == 0 && l.status == CheckLine::Status::pass;
  o.require(exact == 4, "interior exactness");
  o.require(c.report.passed(), c.report.to_text());

  Groups g;
  ObjectId d8 = g.add("D8");
  Subobject b = g.sub(d8, {0, 4}), v = g.sub(d8, {0, 2, 4, 6});
  o.require(!is_normal_subalgebra(g.form->algebra(d8), testing::set_of({0, 4})), "B normal in D8");
  o.require(is_relatively_normal(*g.form, b, v), "B not normal in V");
  o.require(!is_relatively_normal(*g.form, b, top(*g.form, d8)), "relative normality in D8");
  o.detail << "orders 1 1 2 2 2 2, 4 interior nodes exact";
}

void hit(Outcome& o) {
  Groups g;
  auto pool = add_all(g, order8);
  std::mt19937_64 rng(20240601);
  std::size_t induced = 0, total = 250;
  for (std::size_t k = 0; k < total; ++k) {
    Zigzag z = testing::random_zigzag(*g.form, pool, rng, 6);
    auto v = decide_induction(*g.form, z);
    auto rel = testing::relation_oracle(*g.form, z);
    bool fn = oracle::is_function(rel);
    o.require(v.induces == fn, "verdict differs on zigzag " + std::to_string(k));
    if (!v.induces || !fn) continue;
    ++induced;
    auto f = function_of(rel);
    for (SubIndex i = 0; i < g.form->lattice(z.front()).size(); ++i)
      o.require(g.form->mask({z.back(), v.morphism->dimg[i]}) == oracle::image(f, g.form->mask({z.front(), i})),
                "dimg on zigzag " + std::to_string(k));
    for (SubIndex j = 0; j < g.form->lattice(z.back()).size(); ++j)
      o.require(g.form->mask({z.front(), v.morphism->iimg[j]}) == oracle::preimage(f, g.form->mask({z.back(), j})),
                "iimg on zigzag " + std::to_string(k));
  }
  o.require(induced > 0 && induced < total, "both verdicts exercised");
  o.detail << total << " zigzags, " << induced << " induce";
}

void pyramids(Outcome& o) {
  Groups g;
  auto pool = add_all(g, order8);
  std::mt19937_64 rng(4242);
  std::size_t total = 60, induced = 0;
  for (std::size_t k = 0; k < total; ++k) {
    Zigzag z = testing::random_zigzag(*g.form, pool, rng, 5);
    Pyramid a = build_pyramid(*g.form, z);
    Pyramid b = build_pyramid(*g.form, z, {true, true});
    auto fa = check_pyramid(*g.form, a), fb = check_pyramid(*g.form, b);
    o.require(!fa && !fb, "diamond fails on zigzag " + std::to_string(k));
    Zigzag ha = a.principal_horizontal(), hb = b.principal_horizontal();
    bool induces = decide_induction(*g.form, z).induces;
    o.require(is_collapsible(*g.form, ha) == induces && is_collapsible(*g.form, hb) == induces,
              "collapsibility on zigzag " + std::to_string(k));
    if (!induces) continue;
    ++induced;
    Morphism ma = collapse(*g.form, ha), mb = collapse(*g.form, hb);
    o.require(ma.dimg == mb.dimg && ma.iimg == mb.iimg, "build orders differ on " + std::to_string(k));
    o.require(ma.table == function_of(testing::relation_oracle(*g.form, z)),
              "element map on " + std::to_string(k));
  }
  o.require(induced > 0, "some zigzag induces");
  o.detail << total << " zigzags, " << induced << " induce";
}

struct Corpus {
  std::string lemma;
  std::vector<std::string> pool;
};

void lemma_corpus(Outcome& o) {
  const std::vector<std::string> groups = {"Z1", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6", "D8", "Z8", "Z4xZ2"};
  const std::size_t want = 100;
  std::ostringstream counts;
  std::uint64_t seed = 1;
  for (const auto& lemma : {"four-i", "four-ii", "five-i", "five-ii", "3x3-upper", "3x3-lower",
                            "3x3-middle", "short-five", "spider", "incomplete-snail",
                            "square-exact-i", "square-exact-ii"}) {
    std::string name = lemma;
    std::size_t n = 0, refuted = 0, invalid = 0;
    InstanceGenerator gen(groups, seed++);
    InstanceGenerator stacks({"Z1", "Z2", "Z4", "Z8", "Z2xZ2", "Z4xZ2", "Z2xZ2xZ2", "D8", "Q8", "S3"}, seed++);
    bool is3x3 = name.rfind("3x3", 0) == 0;
    for (std::size_t attempt = 0; n < want && attempt < 4 * want; ++attempt) {
      std::optional<Diagram> d;
      if (is3x3 && (name == "3x3-upper" || attempt % 2 == 0)) d = stacks.random_stack_3x3();
      else d = gen.find(lemma_template(name), {}, {}, 400, 8000);
      if (!d) continue;
      LemmaReport r = verify_lemma(*d, name);
      if (!r.hypotheses_hold()) {
        ++invalid;
        continue;
      }
      ++n;
      refuted += r.refuted();
    }
    o.require(n >= want, name + " produced " + std::to_string(n) + " instances");
    o.require(refuted == 0, name + " refuted " + std::to_string(refuted) + " times");
    o.require(invalid == 0, name + " generator emitted invalid instances");
    counts << name << " " << n << ", ";
  }

  InstanceGenerator gen(groups, 99);
  std::size_t dual = 0;
  for (std::size_t attempt = 0; dual < want && attempt < 4 * want; ++attempt) {
    auto d = gen.find(lemma_template("four"), {}, {}, 400, 8000);
    if (!d) continue;
    ++dual;
    LemmaReport two = verify_four(*d, "ii");
    LemmaReport one = verify_four(rename_roles(dualize(*d), four_dual_roles()), "i");
    bool same = one.hypotheses_hold() == two.hypotheses_hold() && one.conclusions.size() == two.conclusions.size();
    for (std::size_t i = 0; same && i < one.conclusions.size(); ++i)
      same = one.conclusions[i].status == two.conclusions[i].status &&
             one.conclusions[i].values == two.conclusions[i].values;
    o.require(same, "four part (ii) differs from dual part (i)");
  }
  o.require(dual >= want, "four dual instances");
  counts << "four dual " << dual;
  o.detail << counts.str();
}

void quotient_isos(Outcome& o) {
  Groups g;
  auto pool = add_all(g, order8);
  const std::vector<ObjectId> nonabelian = {g.add("S3"), g.add("D8")};
  std::mt19937_64 rng(777);
  std::size_t triples = 0, normal = 0;
  for (std::size_t attempt = 0; triples < 400 && attempt < 8000; ++attempt) {
    ObjectId a = rng() % 2 ? nonabelian[rng() % 2] : pool[rng() % pool.size()];
    ObjectId b = rng() % 2 ? a : pool[rng() % pool.size()];
    auto tables = enumerate_homs(g.form->algebra(a), g.form->algebra(b));
    Morphism f = g.form->hom(a, b, tables[rng() % tables.size()]);
    auto ta = testing::group_table(g.form->object_name(a)), tb = testing::group_table(g.form->object_name(b));
    Mask ker = oracle::preimage(f.table, 1);
    std::vector<Mask> above;
    for (Mask s : oracle::subgroups(ta))
      if ((ker & ~s) == 0) above.push_back(s);
    Mask x = rng() % 2 ? above.back() : above[rng() % above.size()];
    std::vector<Mask> between;
    for (Mask s : above)
      if ((s & ~x) == 0) between.push_back(s);
    Mask w = between[rng() % between.size()];
    ++triples;

    auto r = quotient_iso(*g.form, f, g.form->subobject(a, w), g.form->subobject(a, x));
    bool wx = oracle::normal_in(ta, w, x);
    bool fwfx = oracle::normal_in(tb, oracle::image(f.table, w), oracle::image(f.table, x));
    o.require(wx == fwfx, "normality transfer in the oracle");
    o.require(r.w_normal_in_x == wx && r.fw_normal_in_fx == fwfx, "normality verdicts");
    o.require(r.holds(), "quotient_iso does not hold");
    if (!wx) continue;
    ++normal;
    if (!r.zigzag) {
      o.require(false, "missing zigzag");
      continue;
    }
    auto rel = testing::relation_oracle(*g.form, *r.zigzag);
    o.require(bijective(rel, g.form->order(r.zigzag->back())), "induced map is not a bijection");
    std::size_t xw = std::popcount(x) / std::popcount(w);
    std::size_t fxfw = std::popcount(oracle::image(f.table, x)) / std::popcount(oracle::image(f.table, w));
    o.require(g.form->order(r.zigzag->front()) == xw && g.form->order(r.zigzag->back()) == fxfw,
              "orders of X/W and fX/fW");
    o.require(xw == fxfw, "X/W and fX/fW differ in order");
  }
  o.require(triples >= 100, "triples");
  o.require(normal > 0 && normal < triples, "both normality outcomes exercised");
  o.detail << triples << " triples, " << normal << " with W normal in X";
}

void salamanders(Outcome& o) {
  InstanceGenerator gen({"Z1", "Z2", "Z2xZ2", "Z2xZ2xZ2"}, 12);
  std::size_t valid = 0;
  for (std::size_t attempt = 0; valid < 25 && attempt < 200; ++attempt) {
    auto d = gen.find(lemma_template("salamander"), {}, {}, 400, 20000);
    if (!d) continue;
    Construction c = salamander(*d);
    bool guards = true;
    for (const auto& h : c.report.hypotheses)
      if (h.name.rfind("defined", 0) == 0) guards = guards && h.status == CheckLine::Status::pass;
    o.require(guards, "guard failed over an abelian algebra");
    if (!guards) continue;
    ++valid;
    o.require(c.report.passed(), c.report.to_text());
  }
  o.require(valid >= 20, "valid instances " + std::to_string(valid));

  InstanceGenerator rough({"Z1", "Z2", "Z4", "S3", "D8"}, 13);
  std::size_t undefined = 0, tried = 0;
  for (std::size_t attempt = 0; attempt < 60; ++attempt) {
    auto d = rough.find(lemma_template("salamander"), {}, {}, 200, 8000);
    if (!d) continue;
    ++tried;
    try {
      Construction c = salamander(*d);
      bool guards = true;
      for (const auto& h : c.report.hypotheses)
        if (h.name.rfind("defined", 0) == 0 && h.status != CheckLine::Status::pass) guards = false;
      if (!guards) {
        ++undefined;
        o.require(!c.report.passed() && c.report.to_text().find("guard fails") != std::string::npos,
                  "undefined homology object not reported");
      } else {
        o.require(c.report.passed(), c.report.to_text());
      }
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
  }

  // A double complex whose homology object at A needs {e,b} normal in D8.
  Groups g;
  Diagram d;
  d.form = g.form;
  const auto& t = lemma_template("salamander");
  for (const auto& obj : t.objects) d.objects[obj] = g.add("Z1");
  d.objects["Aw"] = g.add("Z2");
  d.objects["A"] = g.add("D8");
  for (const auto& a : t.arrows) {
    ObjectId x = d.objects.at(a.dom), y = d.objects.at(a.cod);
    d.arrows[a.name] = g.form->hom(x, y, std::vector<Element>(g.form->order(x), 0), a.name);
  }
  d.arrows["d"] = g.form->hom(d.objects["Aw"], d.objects["A"], {0, 4}, "d");
  try {
    Construction c = salamander(d);
    o.require(!c.report.passed() && c.report.to_text().find("defined A_h") != std::string::npos,
              "D8 guard failure not reported");
    ++undefined;
  } catch (const std::exception& e) {
    o.require(false, std::string("exception on D8 instance: ") + e.what());
  }
  o.detail << valid << " exact, " << undefined << " undefined of " << tried + 1 << " non-abelian";
}

void rml(Outcome& o) {
  std::size_t qualifying = 0;
  for (const auto& name : order8) {
    Groups g;
    ObjectId x = g.add(name);
    auto table = testing::group_table(name);
    auto subs = oracle::subgroups(table);
    Mask all = oracle::full(table.size());
    for (Mask a : subs)
      for (Mask b : subs)
        for (Mask c : subs) {
          Subobject sa = g.form->subobject(x, a), sb = g.form->subobject(x, b), sc = g.form->subobject(x, c);
          auto r = restricted_modular_law_check(*g.form, sa, sb, sc);
          bool qualifies = (a & ~c) == 0 && (oracle::normal_in(table, b, all) || oracle::normal_in(table, a, all));
          o.require(r.hypotheses_met == qualifies, name + " qualifying triple mismatch");
          if (!qualifies) continue;
          ++qualifying;
          bool law = oracle::join(table, a, b & c) == (oracle::join(table, a, b) & c);
          o.require(law, name + " law fails in the oracle");
          o.require(r.holds, name + " law fails");
        }
  }
  o.detail << qualifying << " qualifying triples";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"axiom conformance for groups of order <= 8 and their duals", axioms},
      {"D8 snake reproduction", d8_snake},
      {"HIT agrees with the relation oracle", hit},
      {"pyramid uniqueness and commutativity", pyramids},
      {"lemma corpus", lemma_corpus},
      {"quotient isomorphism", quotient_isos},
      {"salamander at desk scale", salamanders},
      {"restricted modular law", rml},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %s (%s) [%.2fs]\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.str().c_str(), secs);
    std::fflush(stdout);
    failed += !o.ok;
  }
  return failed ? 1 : 0;
}

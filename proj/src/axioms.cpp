#include "noether/axioms.hpp"

#include <functional>
#include <random>
#include <sstream>
#include <unordered_map>

namespace noether {

bool AxiomReport::passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

const AxiomEntry* AxiomReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::string AxiomReport::to_text() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    out << (e.passed ? "PASS " : "FAIL ") << e.name;
    if (!e.passed && !e.witness.empty()) out << " " << e.witness;
    if (!e.note.empty()) out << " (" << e.note << ")";
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<ObjectId> declared_objects(const Form& form) {
  std::vector<ObjectId> out;
  for (ObjectId x = 0; x < form.object_count(); ++x)
    if (form.is_declared_object(x)) out.push_back(x);
  return out;
}

class Checker {
 public:
  Checker(const Form& form, const AxiomOptions& options)
      : form_(form), options_(options), objects_(declared_objects(form)),
        morphisms_(form.morphisms()) {}

  AxiomReport run() {
    AxiomReport report;
    report.form = form_.name();
    report.entries.push_back(guarded("P1", [&](AxiomEntry& e) { reflexive(e); }));
    report.entries.push_back(guarded("P2", [&](AxiomEntry& e) { transitive(e); }));
    report.entries.push_back(guarded("P3", [&](AxiomEntry& e) { antisymmetric(e); }));
    report.entries.push_back(guarded("BL", [&](AxiomEntry& e) { bounded_lattice(e); }));
    const bool lattices_ok = report.passed();
    auto lattice_gate = [&](const char* name, auto&& body) {
      if (!lattices_ok) return AxiomEntry{name, false, "subobject posets are not lattices", {}};
      return guarded(name, body);
    };
    report.entries.push_back(lattice_gate("G", [&](AxiomEntry& e) { galois(e); }));
    report.entries.push_back(lattice_gate("I", [&](AxiomEntry& e) { identities(e); }));
    composites();
    AxiomEntry f2{"F2", true, {}, {}};
    report.entries.push_back(lattice_gate("A", [&](AxiomEntry& e) { associativity(e, f2); }));
    report.entries.push_back(lattice_gate("F1", [&](AxiomEntry& e) { functor_identity(e); }));
    if (!lattices_ok) f2 = {"F2", false, "subobject posets are not lattices", {}};
    report.entries.push_back(f2);
    report.entries.push_back(lattice_gate("Ax2", [&](AxiomEntry& e) { axiom2(e); }));
    report.entries.push_back(lattice_gate("Ax3", [&](AxiomEntry& e) { axiom3(e); }));
    report.entries.push_back(lattice_gate("Ax4", [&](AxiomEntry& e) { axiom4(e); }));
    report.entries.push_back(lattice_gate("Ax5", [&](AxiomEntry& e) { axiom5(e); }));
    if (options_.include_axiom6)
      report.entries.push_back(lattice_gate("Ax6", [&](AxiomEntry& e) { axiom6(e); }));
    return report;
  }

 private:
  template <class Body>
  AxiomEntry guarded(const char* name, Body&& body) {
    AxiomEntry e{name, true, {}, {}};
    try {
      body(e);
    } catch (const Error& err) {
      e.passed = false;
      e.witness = err.what();
    }
    return e;
  }

  static void fail(AxiomEntry& e, std::string witness) {
    if (e.passed) {
      e.passed = false;
      e.witness = std::move(witness);
    }
  }

  std::string key(ObjectId x, SubIndex i) const {
    return form_.object_name(x) + ":" + form_.lattice(x).key(i);
  }

  void reflexive(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      Lattice l = form_.lattice(x);
      for (SubIndex a = 0; a < l.size(); ++a)
        if (!l.leq(a, a)) return fail(e, key(x, a) + " not <= itself");
    }
  }

  void transitive(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      Lattice l = form_.lattice(x);
      const std::size_t n = l.size();
      for (SubIndex a = 0; a < n; ++a)
        for (SubIndex b = 0; b < n; ++b)
          if (l.leq(a, b))
            for (SubIndex c = 0; c < n; ++c)
              if (l.leq(b, c) && !l.leq(a, c))
                return fail(e, key(x, a) + " <= " + l.key(b) + " <= " + l.key(c));
    }
  }

  void antisymmetric(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      Lattice l = form_.lattice(x);
      for (SubIndex a = 0; a < l.size(); ++a)
        for (SubIndex b = a + 1; b < l.size(); ++b)
          if (l.leq(a, b) && l.leq(b, a))
            return fail(e, key(x, a) + " and " + l.key(b) + " are mutually below");
    }
  }

  void bounded_lattice(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      Lattice l = form_.lattice(x);
      const std::size_t n = l.size();
      if (l.try_bottom() == kNoSub) return fail(e, form_.object_name(x) + " has no bottom");
      if (l.try_top() == kNoSub) return fail(e, form_.object_name(x) + " has no top");
      for (SubIndex a = 0; a < n; ++a)
        for (SubIndex b = 0; b < n; ++b) {
          SubIndex j = l.try_join(a, b), m = l.try_meet(a, b);
          if (j == kNoSub) return fail(e, "no join of " + key(x, a) + " and " + l.key(b));
          if (m == kNoSub) return fail(e, "no meet of " + key(x, a) + " and " + l.key(b));
          for (SubIndex c = 0; c < n; ++c) {
            bool upper = l.leq(a, c) && l.leq(b, c);
            bool lower = l.leq(c, a) && l.leq(c, b);
            if (upper != l.leq(j, c))
              return fail(e, "join of " + key(x, a) + " and " + l.key(b) + " is not least");
            if (lower != l.leq(c, m))
              return fail(e, "meet of " + key(x, a) + " and " + l.key(b) + " is not greatest");
          }
        }
    }
  }

  void galois(AxiomEntry& e) {
    for (const auto& f : morphisms_) {
      Lattice ld = form_.lattice(f.dom), lc = form_.lattice(f.cod);
      if (f.dimg.size() != ld.size() || f.iimg.size() != lc.size())
        return fail(e, form_.arrow_name(f) + " has image maps of the wrong size");
      for (SubIndex a = 0; a < ld.size(); ++a)
        for (SubIndex c = 0; c < lc.size(); ++c)
          if (lc.leq(f.dimg[a], c) != ld.leq(a, f.iimg[c]))
            return fail(e, form_.arrow_name(f) + " at " + ld.key(a) + ", " + lc.key(c));
      for (SubIndex a = 0; a < ld.size(); ++a)
        for (SubIndex b = 0; b < ld.size(); ++b)
          if (f.dimg[ld.join(a, b)] != lc.join(f.dimg[a], f.dimg[b]))
            return fail(e, form_.arrow_name(f) + " does not preserve the join of " +
                               ld.key(a) + " and " + ld.key(b));
      if (f.dimg[ld.bottom()] != lc.bottom())
        return fail(e, form_.arrow_name(f) + " does not preserve bottom");
      if (f.iimg[lc.top()] != ld.top())
        return fail(e, form_.arrow_name(f) + " does not preserve top under inverse image");
    }
  }

  void identities(AxiomEntry& e) {
    for (const auto& f : morphisms_) {
      if (!form_.equal(form_.compose(form_.identity(f.cod), f), f))
        return fail(e, "id . " + form_.arrow_name(f) + " differs");
      if (!form_.equal(form_.compose(f, form_.identity(f.dom)), f))
        return fail(e, form_.arrow_name(f) + " . id differs");
    }
  }

  static std::size_t hash_morphism(const Morphism& m) {
    std::size_t h = m.dom * 1000003u ^ m.cod;
    auto mix = [&](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2); };
    for (auto v : m.dimg) mix(v);
    for (auto v : m.iimg) mix(v);
    return h;
  }

  void composites() {
    by_dom_.clear();
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
      by_dom_.emplace(morphisms_[i].dom, i);
    index_.clear();
    for (std::size_t i = 0; i < morphisms_.size(); ++i)
      index_.emplace(hash_morphism(morphisms_[i]), i);
  }

  bool declared(const Morphism& m) const {
    auto [lo, hi] = index_.equal_range(hash_morphism(m));
    for (auto it = lo; it != hi; ++it)
      if (form_.equal(morphisms_[it->second], m)) return true;
    return false;
  }

  void associativity(AxiomEntry& e, AxiomEntry& f2) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (g, f) composable
    for (std::size_t fi = 0; fi < morphisms_.size(); ++fi) {
      auto [lo, hi] = by_dom_.equal_range(morphisms_[fi].cod);
      for (auto it = lo; it != hi; ++it) pairs.emplace_back(it->second, fi);
    }
    for (auto [gi, fi] : pairs) {
      const auto &g = morphisms_[gi], &f = morphisms_[fi];
      Morphism gf;
      try {
        gf = form_.compose(g, f);
      } catch (const Error& err) {
        fail(f2, err.what());
        return fail(e, err.what());
      }
      functor_compose(f2, g, f, gf);
      if (e.passed && !declared(gf))
        fail(e, "composite " + form_.arrow_name(g) + " after " + form_.arrow_name(f) +
                    " is not a declared morphism");
    }
    if (!e.passed) return;
    std::size_t triples = 0;
    for (auto [gi, fi] : pairs) triples += by_dom_.count(morphisms_[gi].cod);
    auto check = [&](std::size_t hi, std::size_t gi, std::size_t fi) {
      const auto &h = morphisms_[hi], &g = morphisms_[gi], &f = morphisms_[fi];
      Morphism left = form_.compose(h, form_.compose(g, f));
      Morphism right = form_.compose(form_.compose(h, g), f);
      if (!form_.equal(left, right))
        fail(e, "(" + h.label + " " + g.label + ") " + f.label + " differs");
    };
    if (triples <= options_.associativity_budget) {
      for (auto [gi, fi] : pairs) {
        auto [lo, hi] = by_dom_.equal_range(morphisms_[gi].cod);
        for (auto it = lo; it != hi && e.passed; ++it) check(it->second, gi, fi);
      }
      return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
    for (std::size_t n = 0; n < options_.associativity_budget && e.passed;) {
      auto [gi, fi] = pairs[pick(rng)];
      auto [lo, hi] = by_dom_.equal_range(morphisms_[gi].cod);
      const std::size_t count = static_cast<std::size_t>(std::distance(lo, hi));
      if (count == 0) {
        ++n;
        continue;
      }
      std::advance(lo, static_cast<std::ptrdiff_t>(rng() % count));
      check(lo->second, gi, fi);
      ++n;
    }
    e.note = "sampled " + std::to_string(options_.associativity_budget) + " of " +
             std::to_string(triples) + " triples";
  }

  void functor_identity(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      Morphism id = form_.identity(x);
      for (SubIndex a = 0; a < id.dimg.size(); ++a)
        if (id.dimg[a] != a || id.iimg[a] != a)
          return fail(e, "identity of " + form_.object_name(x) + " moves " + key(x, a));
    }
  }

  void functor_compose(AxiomEntry& e, const Morphism& g, const Morphism& f,
                       const Morphism& gf) {
    if (!e.passed) return;
    for (SubIndex a = 0; a < f.dimg.size(); ++a)
      if (gf.dimg[a] != g.dimg[f.dimg[a]])
        return fail(e, "direct image of " + g.label + "." + f.label + " at " + key(f.dom, a));
    for (SubIndex c = 0; c < g.iimg.size(); ++c)
      if (gf.iimg[c] != f.iimg[g.iimg[c]])
        return fail(e, "inverse image of " + g.label + "." + f.label + " at " + key(g.cod, c));
  }

  void axiom2(AxiomEntry& e) {
    for (const auto& f : morphisms_) {
      Lattice ld = form_.lattice(f.dom), lc = form_.lattice(f.cod);
      SubIndex im = f.dimg[ld.top()], ker = f.iimg[lc.bottom()];
      for (SubIndex b = 0; b < lc.size(); ++b)
        if (f.dimg[f.iimg[b]] != lc.meet(b, im))
          return fail(e, form_.arrow_name(f) + ": f f^-1 " + lc.key(b) + " != meet with image");
      for (SubIndex a = 0; a < ld.size(); ++a)
        if (f.iimg[f.dimg[a]] != ld.join(a, ker))
          return fail(e, form_.arrow_name(f) + ": f^-1 f " + ld.key(a) + " != join with kernel");
    }
  }

  void axiom3(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      Lattice l = form_.lattice(x);
      for (SubIndex s = 0; s < l.size(); ++s) {
        Subobject sub{x, s};
        if (form_.is_conormal(sub)) {
          auto emb = form_.embedding_of(sub);
          if (!emb) return fail(e, "no embedding for conormal " + key(x, s));
          if (emb->cod != x || image(form_, *emb) != sub)
            return fail(e, "embedding of " + key(x, s) + " has the wrong image");
          for (const auto& f : morphisms_) {
            if (f.cod != x || !l.leq(f.dimg[form_.lattice(f.dom).top()], s)) continue;
            auto us = form_.lifts(*emb, f);
            if (us.size() != 1)
              return fail(e, std::to_string(us.size()) + " factorizations of " +
                                 form_.arrow_name(f) + " through embedding of " + key(x, s));
          }
        }
        if (form_.is_normal(sub)) {
          auto proj = form_.projection_of(sub);
          if (!proj) return fail(e, "no projection for normal " + key(x, s));
          if (proj->dom != x || kernel(form_, *proj) != sub)
            return fail(e, "projection of " + key(x, s) + " has the wrong kernel");
          for (const auto& f : morphisms_) {
            if (f.dom != x || !l.leq(s, f.iimg[form_.lattice(f.cod).bottom()])) continue;
            auto vs = form_.descents(*proj, f);
            if (vs.size() != 1)
              return fail(e, std::to_string(vs.size()) + " factorizations of " +
                                 form_.arrow_name(f) + " through projection of " + key(x, s));
          }
        }
      }
    }
  }

  void axiom4(AxiomEntry& e) {
    for (const auto& f : morphisms_) {
      auto fac = form_.try_factorize(f);
      if (!fac) return fail(e, "cannot factorize " + form_.arrow_name(f));
      Morphism whole = form_.compose(fac->m, form_.compose(fac->h, fac->e));
      if (!form_.equal(whole, f)) return fail(e, "factorization of " + form_.arrow_name(f) + " differs");
      if (!is_isomorphism(form_, fac->h))
        return fail(e, "middle of " + form_.arrow_name(f) + " is not an isomorphism");
      if (kernel(form_, fac->e) != kernel(form_, f) || !is_surjective(form_, fac->e))
        return fail(e, "projection part of " + form_.arrow_name(f) + " is wrong");
      if (image(form_, fac->m) != image(form_, f) || !is_injective(form_, fac->m))
        return fail(e, "embedding part of " + form_.arrow_name(f) + " is wrong");
    }
  }

  void axiom5(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      Lattice l = form_.lattice(x);
      std::vector<SubIndex> normal, conormal;
      for (SubIndex s = 0; s < l.size(); ++s) {
        if (form_.is_normal({x, s})) normal.push_back(s);
        if (form_.is_conormal({x, s})) conormal.push_back(s);
      }
      for (SubIndex a : normal)
        for (SubIndex b : normal)
          if (!form_.is_normal({x, l.join(a, b)}))
            return fail(e, "join of normal " + key(x, a) + " and " + l.key(b) + " is not normal");
      for (SubIndex a : conormal)
        for (SubIndex b : conormal)
          if (!form_.is_conormal({x, l.meet(a, b)}))
            return fail(e, "meet of conormal " + key(x, a) + " and " + l.key(b) +
                               " is not conormal");
    }
  }

  void axiom6(AxiomEntry& e) {
    for (ObjectId x : objects_) {
      if (!form_.is_conormal(bottom(form_, x)))
        return fail(e, "bottom of " + form_.object_name(x) + " is not conormal");
      if (!form_.is_normal(top(form_, x)))
        return fail(e, "top of " + form_.object_name(x) + " is not normal");
    }
  }

  const Form& form_;
  AxiomOptions options_;
  std::vector<ObjectId> objects_;
  std::vector<Morphism> morphisms_;
  std::unordered_multimap<ObjectId, std::size_t> by_dom_;
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

}  // namespace

AxiomReport axiom_suite(const Form& form, const AxiomOptions& options) {
  return Checker(form, options).run();
}

}  // namespace noether
